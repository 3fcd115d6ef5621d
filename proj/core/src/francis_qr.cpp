#include <cmath>
#include <vector>

#include "geospin/error.hpp"
#include "geospin/spectrum.hpp"

namespace geospin {

namespace {

// 1-based dense square matrix; keeps the QR sweep close to its classical form.
class Square {
 public:
  explicit Square(const Eigen::MatrixXd& m)
      : n_(static_cast<int>(m.rows())), a_((n_ + 1) * (n_ + 1), 0.0) {
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) (*this)(i, j) = m(i - 1, j - 1);
    }
  }
  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }

 private:
  int n_;
  std::vector<double> a_;
};

// Parlett–Reinsch balancing by powers of two (exact in floating point).
void balance(Eigen::MatrixXd& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Householder similarity reduction to upper Hessenberg form.
void hessenberg(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    Eigen::VectorXd v = a.col(k).tail(len);
    const double alpha = v.norm();
    if (alpha == 0.0) continue;
    v(0) += v(0) >= 0.0 ? alpha : -alpha;
    const double vn = v.norm();
    if (vn == 0.0) continue;
    v /= vn;
    // A ← P A P with P = I − 2 v vᵀ acting on rows/cols k+1..n-1
    auto rows = a.bottomRows(len);
    rows -= 2.0 * v * (v.transpose() * rows);
    auto cols = a.rightCols(len);
    cols -= 2.0 * (cols * v) * v.transpose();
    a.col(k).tail(len - 1).setZero();
  }
}

double sign(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues
// returned in (wr, wi), 1-based.
void hqr(Square& a, std::vector<double>& wr, std::vector<double>& wi, int max_sweeps) {
  const int n = a.n();
  double anorm = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));
  }
  int nn = n;
  double t = 0.0;
  int sweeps = 0;
  double p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {  // one root found
        wr[nn] = x + t;
        wi[nn--] = 0.0;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {  // two roots found
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -(wi[nn] = z);
          }
          nn -= 2;
        } else {
          if (++sweeps > max_sweeps) {
            throw ConvergenceError("QR iteration did not converge within " +
                                   std::to_string(max_sweeps) + " sweeps");
          }
          if (its == 10 || its == 20) {  // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                            std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = sign(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

}  // namespace

std::vector<Complex> eigenvalues_real_nonsymmetric(const Eigen::MatrixXd& m,
                                                   const EigenConfig& config) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("eigenvalues need a non-empty square matrix");
  }
  if (!m.allFinite()) throw InvalidArgument("matrix has non-finite entries");

  Eigen::MatrixXd a = m;
  balance(a);
  hessenberg(a);
  Square h(a);
  const int n = h.n();
  std::vector<double> wr(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> wi(static_cast<std::size_t>(n) + 1, 0.0);
  hqr(h, wr, wi, config.sweeps_per_dimension * n);

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.emplace_back(wr[static_cast<std::size_t>(i)], wi[static_cast<std::size_t>(i)]);
  sort_spectrum(out);
  return out;
}

}  // namespace geospin
