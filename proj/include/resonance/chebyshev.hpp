#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace resonance {

// Chebyshev interpolant on [a, b] built on N+1 Chebyshev-Lobatto nodes.
// Stores the expansion f(x) = sum_{j=0}^{N} coef[j] T_j(t), t = (2x-a-b)/(b-a).
class ChebyshevInterpolant {
  public:
    ChebyshevInterpolant() = default;
    ChebyshevInterpolant(std::function<double(double)> f, double a, double b, std::size_t n);
    // values[k] = f(node(k)), k = 0..n (node(0) = b, node(n) = a)
    ChebyshevInterpolant(const std::vector<double>& values, double a, double b);

    static std::vector<double> nodes(double a, double b, std::size_t n);

    double operator()(double x) const;
    ChebyshevInterpolant derivative() const;
    // antiderivative F with F(a) = 0
    ChebyshevInterpolant antiderivative() const;
    double integral() const;  // over [a, b]

    double a() const { return a_; }
    double b() const { return b_; }
    std::size_t degree() const { return coef_.empty() ? 0 : coef_.size() - 1; }
    const std::vector<double>& coefficients() const { return coef_; }

    // max |coef| over the top `tail` coefficients, a cheap convergence gauge
    double tail_magnitude(std::size_t tail = 4) const;

  private:
    double a_ = -1.0, b_ = 1.0;
    std::vector<double> coef_;

    void compute_coefficients(const std::vector<double>& values);
};

}  // namespace resonance
