#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace pflab {

using cd = std::complex<double>;

/// Nondegenerate triangle with counterclockwise vertices.
class Triangle {
 public:
  /// Reorders to counterclockwise; throws InvalidArgument when the area vanishes.
  Triangle(cd a, cd b, cd c);

  const std::array<cd, 3>& vertices() const { return v_; }
  double perimeter() const;
  double area() const;
  /// Strict interior test.
  bool contains(cd z) const;
  double boundary_distance(cd z) const;

 private:
  std::array<cd, 3> v_;
};

struct DisconjugacyReport {
  bool disconjugate = false;
  double margin = 0;  // 1 - sum c_k r^k / k!
};

/// c[k-1] bounds |a_k| for y^(n) + a_1 y^(n-1) + ... + a_n y = 0.
DisconjugacyReport disconjugacy_test(const std::vector<double>& c, double r);

/// Splits [0, length] into the fewest equal pieces with sum c_k r^k / k! <= 1/2 and returns
/// pieces * (n - 1).
std::int64_t interval_zero_bound(const std::vector<double>& c, double length);

/// pi (n + 1)(1 + 3 C length): bounds the argument variation of a solution along a segment.
double index_bound(int n, double C, double length);

/// (3/2)(n + 1)(1 + perimeter R): bounds the zeros in a triangle.
double triangle_zero_bound(int n, double R, double perimeter);

struct ExponentSet {
  struct Entry {
    cd lambda;
    int multiplicity = 1;
  };
  std::vector<Entry> entries;

  int count() const;
  double diameter() const;
};

/// floor(#S - 1 + 2 diam S); throws NonRealSpectrum for non-real exponents.
std::int64_t quasipolynomial_bound(const ExponentSet& S);

/// sum c t^lambda ln^k t on the plane slit along the negative real axis (principal branch).
struct Quasipolynomial {
  struct Term {
    cd lambda;
    int log_power = 0;
    cd coeff;
  };
  std::vector<Term> terms;

  cd eval(cd t) const;
  ExponentSet exponents() const;
};

/// True when the closed triangle meets the slit (-inf, 0].
bool crosses_slit(const Triangle& T);

struct CountOptions {
  /// Width of the boundary tube that must be free of zeros; <= 0 selects 1e-9 (1 + perimeter).
  double tube = 0;
  int initial_samples = 64;  // per edge
  std::size_t max_evaluations = std::size_t{1} << 20;
};

/// Winding number of f along the boundary, refined until consecutive phase increments are
/// below pi/2 and two successive refinements agree. Throws ZeroOnBoundary, NonConvergent.
int argument_principle_count(const std::function<cd(cd)>& f, const Triangle& T, const CountOptions& options = {});
/// Same for a closed polygon (vertices counterclockwise, not repeated).
int argument_principle_count(const std::function<cd(cd)>& f, const std::vector<cd>& polygon,
                             const CountOptions& options = {});

/// Total variation of arg f along the segment [a, b] (sum of |d arg|).
double argument_variation(const std::function<cd(cd)>& f, cd a, cd b, const CountOptions& options = {});

/// Zeros of q in T; throws SlitCrossing when T meets the branch cut.
int count_quasipolynomial_zeros(const Quasipolynomial& q, const Triangle& T, const CountOptions& options = {});

}  // namespace pflab
