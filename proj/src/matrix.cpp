#include "cglab/matrix.hpp"

#include <utility>

namespace cglab {

std::string Provenance::to_string() const
{
    std::string out = builder;
    for (const auto& [k, v] : params) out += " " + k + "=" + v;
    return out;
}

Matrix::Matrix(std::size_t n, std::optional<ModCtx> ctx, Provenance prov)
    : n_(n), ctx_(std::move(ctx)), prov_(std::move(prov))
{
    if (ctx_) {
        res_.assign(n * n, 0);
    } else {
        ints_.assign(n * n, BigInt(0));
    }
}

Matrix Matrix::residues(std::size_t n, const ModCtx& ctx, Provenance prov) { return {n, ctx, std::move(prov)}; }

Matrix Matrix::integers(std::size_t n, Provenance prov) { return {n, std::nullopt, std::move(prov)}; }

void Matrix::set_residue(std::size_t i, std::size_t j, u64 v)
{
    if (!ctx_) throw Error("set_residue on an exact-integer matrix");
    res_[i * n_ + j] = ctx_->reduce_u(v);
}

BigInt Matrix::integer(std::size_t i, std::size_t j) const
{
    if (ctx_) return BigInt(static_cast<unsigned long>(res_[i * n_ + j]));
    return ints_[i * n_ + j];
}

void Matrix::set_integer(std::size_t i, std::size_t j, const BigInt& v)
{
    if (ctx_) {
        res_[i * n_ + j] = ctx_->reduce(v);
    } else {
        ints_[i * n_ + j] = v;
    }
}

bool Matrix::is_zero(std::size_t i, std::size_t j) const
{
    return ctx_ ? res_[i * n_ + j] == 0 : ints_[i * n_ + j] == 0;
}

Matrix Matrix::lifted() const
{
    if (!ctx_) return *this;
    Matrix out = integers(n_, prov_);
    for (std::size_t k = 0; k < n_ * n_; ++k) out.ints_[k] = BigInt(static_cast<unsigned long>(res_[k]));
    return out;
}

Matrix Matrix::reduced(const ModCtx& ctx) const
{
    if (ctx_ && ctx_->modulus() % ctx.modulus() != 0) {
        throw InvalidModulus("cannot reduce a matrix mod " + std::to_string(ctx_->modulus()) + " to mod " +
                             std::to_string(ctx.modulus()));
    }
    Matrix out = residues(n_, ctx, prov_);
    for (std::size_t k = 0; k < n_ * n_; ++k) {
        out.res_[k] = ctx_ ? ctx.reduce_u(res_[k]) : ctx.reduce(ints_[k]);
    }
    return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    if (rows.size() != cols.size()) throw Error("submatrix must be square");
    const std::size_t m = rows.size();
    Matrix out(m, ctx_, Provenance{prov_.builder + "/sub", prov_.params});
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (ctx_) {
                out.res_[i * m + j] = res_[rows[i] * n_ + cols[j]];
            } else {
                out.ints_[i * m + j] = ints_[rows[i] * n_ + cols[j]];
            }
        }
    }
    return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) {
        if (ctx_) {
            std::swap(res_[a * n_ + j], res_[b * n_ + j]);
        } else {
            std::swap(ints_[a * n_ + j], ints_[b * n_ + j]);
        }
    }
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.n_ != b.n_ || a.ctx_.has_value() != b.ctx_.has_value()) return false;
    if (a.ctx_ && !(*a.ctx_ == *b.ctx_)) return false;
    return a.ctx_ ? a.res_ == b.res_ : a.ints_ == b.ints_;
}

}  // namespace cglab
