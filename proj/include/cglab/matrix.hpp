#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cglab/modnum.hpp"

namespace cglab {

/// Builder tag plus the parameters needed to rebuild a matrix bit-exactly.
struct Provenance {
    std::string builder;
    std::map<std::string, std::string> params;

    std::string to_string() const;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Dense square matrix, either of canonical residues under a ModCtx or of
/// exact integers (no context). Storage is row-major and 0-based; builders
/// document how 1-based math indices map onto rows and columns.
class Matrix {
public:
    static Matrix residues(std::size_t n, const ModCtx& ctx, Provenance prov = {});
    static Matrix integers(std::size_t n, Provenance prov = {});

    std::size_t order() const noexcept { return n_; }
    bool is_exact() const noexcept { return !ctx_.has_value(); }
    const std::optional<ModCtx>& ctx() const noexcept { return ctx_; }
    const Provenance& provenance() const noexcept { return prov_; }
    void set_provenance(Provenance p) { prov_ = std::move(p); }

    // residue mode
    u64 residue(std::size_t i, std::size_t j) const { return res_[i * n_ + j]; }
    void set_residue(std::size_t i, std::size_t j, u64 v);

    // exact mode; in residue mode integer() lifts the canonical representative
    BigInt integer(std::size_t i, std::size_t j) const;
    void set_integer(std::size_t i, std::size_t j, const BigInt& v);
    void set_integer(std::size_t i, std::size_t j, i64 v) { set_integer(i, j, BigInt(static_cast<long>(v))); }

    bool is_zero(std::size_t i, std::size_t j) const;

    /// Exact copy with canonical representatives.
    Matrix lifted() const;
    /// Entries reduced into ctx. A residue matrix may only be reduced to a
    /// modulus dividing its own.
    Matrix reduced(const ModCtx& ctx) const;

    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Matrix(std::size_t n, std::optional<ModCtx> ctx, Provenance prov);

    std::size_t n_;
    std::optional<ModCtx> ctx_;
    Provenance prov_;
    std::vector<u64> res_;
    std::vector<BigInt> ints_;
};

}  // namespace cglab
