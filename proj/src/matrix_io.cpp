#include "cglab/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace cglab {

void write_matrix(std::ostream& os, const Matrix& m)
{
    const std::size_t n = m.order();
    os << n << ' ' << (m.ctx() ? m.ctx()->modulus() : 0) << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != 0) os << ' ';
            if (m.is_exact()) {
                os << m.integer(i, j).get_str();
            } else {
                os << m.residue(i, j);
            }
        }
        os << '\n';
    }
}

Matrix read_matrix(std::istream& is)
{
    long long n = -1;
    long long mod = -1;
    if (!(is >> n >> mod)) throw FormatError("matrix header must be 'n m'");
    if (n < 1) throw FormatError("matrix order must be >= 1, got " + std::to_string(n));
    if (mod < 0) throw FormatError("modulus must be >= 0, got " + std::to_string(mod));

    const auto order = static_cast<std::size_t>(n);
    Provenance prov{"file", {{"n", std::to_string(n)}, {"mod", std::to_string(mod)}}};
    Matrix m = mod == 0 ? Matrix::integers(order, prov)
                        : Matrix::residues(order, ModCtx::classify(static_cast<u64>(mod)), prov);
    std::string tok;
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            if (!(is >> tok)) {
                throw FormatError("matrix ends early at row " + std::to_string(i + 1) + ", column " +
                                  std::to_string(j + 1));
            }
            BigInt v;
            if (v.set_str(tok, 10) != 0) throw FormatError("not an integer: '" + tok + "'");
            if (mod != 0 && (v < 0 || v >= static_cast<unsigned long>(mod))) {
                throw FormatError("entry " + tok + " is not a canonical residue mod " + std::to_string(mod));
            }
            m.set_integer(i, j, v);
        }
    }
    if (is >> tok) throw FormatError("trailing data after matrix: '" + tok + "'");
    return m;
}

std::string format_matrix(const Matrix& m)
{
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

Matrix parse_matrix(const std::string& text)
{
    std::istringstream is(text);
    return read_matrix(is);
}

}  // namespace cglab
