#ifndef QSV_ERRORS_HPP
#define QSV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qsv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix fails the Hermitian check; carries the max-norm residual.
struct NotHermitianError : Error {
  double residual;
  explicit NotHermitianError(double r)
      : Error("matrix is not Hermitian: max |M - M^dagger| = " +
              std::to_string(r)),
        residual(r) {}
};

// Matrix fails the idempotency check; carries the max-norm residual.
struct NotIdempotentError : Error {
  double residual;
  explicit NotIdempotentError(double r)
      : Error("matrix is not idempotent: max |M^2 - M| = " +
              std::to_string(r)),
        residual(r) {}
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(long a, long b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

struct DecompositionFailureError : Error {
  using Error::Error;
};

struct NormalizationError : Error {
  double norm;
  explicit NormalizationError(double n)
      : Error("state vector is not normalized: ||v|| = " + std::to_string(n)),
        norm(n) {}
};

struct NonCommutingError : Error {
  std::string label_a, label_b;
  NonCommutingError(std::string a, std::string b)
      : Error("projectors do not commute: " + a + ", " + b),
        label_a(std::move(a)),
        label_b(std::move(b)) {}
};

// Contexts exclude the zero and identity operators.
struct TrivialMemberError : Error {
  std::string label;
  explicit TrivialMemberError(std::string l)
      : Error("trivial projector in context: " + l), label(std::move(l)) {}
};

struct UnboundAtomsError : Error {
  std::vector<std::string> atoms;
  explicit UnboundAtomsError(std::vector<std::string> names)
      : Error(message(names)), atoms(std::move(names)) {}

 private:
  static std::string message(const std::vector<std::string>& names) {
    std::string m = "unbound atoms:";
    for (const auto& n : names) m += " " + n;
    return m;
  }
};

struct SyntaxError : Error {
  int line, column;
  std::vector<std::string> expected;
  SyntaxError(int ln, int col, std::vector<std::string> exp, std::string found)
      : Error(message(ln, col, exp, found)),
        line(ln),
        column(col),
        expected(std::move(exp)) {}

 private:
  static std::string message(int ln, int col,
                             const std::vector<std::string>& exp,
                             const std::string& found) {
    std::string m = "syntax error at " + std::to_string(ln) + ":" +
                    std::to_string(col) + ": found " + found + ", expected";
    for (const auto& e : exp) m += " " + e;
    return m;
  }
};

}  // namespace qsv

#endif  // QSV_ERRORS_HPP
