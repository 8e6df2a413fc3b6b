#include "qent/nonlocality.hpp"

#include <algorithm>
#include <cmath>

#include "qent/tolerances.hpp"
#include "qent/zoo.hpp"

namespace qent {

namespace {

// Row r of a Pauli matrix has a single nonzero; returns its column and value.
void pauli_row(std::size_t which, std::size_t r, std::size_t& col, cplx& val) {
    switch (which) {
        case 0: col = r; val = 1.0; break;
        case 1: col = 1 - r; val = 1.0; break;
        case 2: col = 1 - r; val = r == 0 ? cplx(0, -1) : cplx(0, 1); break;
        default: col = r; val = r == 0 ? 1.0 : -1.0; break;
    }
}

// Tr[rho (sigma_{i1} (x) ... (x) sigma_{in})] using the one-nonzero-per-row
// structure of Pauli tensor products.
double pauli_component(const CMat& rho, const std::size_t* idx, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    cplx sum = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t col = 0;
        cplx val = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t bit = (c >> (n - 1 - j)) & 1, cb;
            cplx pv;
            pauli_row(idx[j], bit, cb, pv);
            col = col * 2 + cb;
            val *= pv;
        }
        sum += rho(col, c) * val;
    }
    return sum.real();
}

double re_trace_prod(const CMat& a, const CMat& b) {
    cplx t = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t += a(r, c) * b(c, r);
    return t.real();
}

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 scale3(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 add3(const Vec3& a, const Vec3& b, double sb) {
    return {a[0] + sb * b[0], a[1] + sb * b[1], a[2] + sb * b[2]};
}

double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

double CorrelationTensor::at(const std::vector<std::size_t>& idx) const {
    require(idx.size() == n, "correlation index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t v : idx) {
        require(v < 4, "correlation index out of range");
        flat = flat * 4 + v;
    }
    return t[flat];
}

CorrelationTensor correlation_tensor(const CMat& rho, std::size_t n) {
    require(n >= 1 && n <= 6, "correlation tensor supports 1..6 qubits");
    require(rho.square() && rho.rows() == (std::size_t{1} << n),
            "state dimension is not 2^n");
    CorrelationTensor out;
    out.n = n;
    out.t.resize(std::size_t{1} << (2 * n));
    std::vector<std::size_t> idx(n);
    for (std::size_t flat = 0; flat < out.t.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = n; j-- > 0;) {
            idx[j] = rem & 3;
            rem >>= 2;
        }
        out.t[flat] = pauli_component(rho, idx.data(), n);
    }
    return out;
}

void BellSettings::validate() const {
    require(!site.empty(), "settings need at least one site");
    for (const auto& pair : site)
        for (const auto& v : pair)
            require(std::abs(norm3(v) - 1.0) <= 1e-12, "setting vectors must be unit");
}

CMat axis_observable(const Vec3& a) {
    CMat m(2, 2);
    m(0, 0) = a[2];
    m(0, 1) = cplx(a[0], -a[1]);
    m(1, 0) = cplx(a[0], a[1]);
    m(1, 1) = -a[2];
    return m;
}

CMat chsh_operator(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
    CMat bp = axis_observable(b1) + axis_observable(b2);
    CMat bm = axis_observable(b1) - axis_observable(b2);
    return kron(axis_observable(a1), bp) + kron(axis_observable(a2), bm);
}

double bell_chsh_value(const CMat& rho, const BellSettings& settings) {
    settings.validate();
    require(settings.site.size() == 2, "CHSH takes two sites");
    require(rho.square() && rho.rows() == 4, "CHSH needs a two-qubit state");
    const auto& a = settings.site[0];
    const auto& b = settings.site[1];
    return re_trace_prod(chsh_operator(a[0], a[1], b[0], b[1]), rho);
}

namespace {

// Real eigenvector from a complex column of a real-symmetric eigensystem: the
// real and imaginary parts both lie in the eigenspace, so keep the larger.
Vec3 real_column(const CMat& vecs, std::size_t k) {
    Vec3 x{}, y{};
    for (std::size_t i = 0; i < 3; ++i) {
        x[i] = vecs(i, k).real();
        y[i] = vecs(i, k).imag();
    }
    Vec3 v = norm3(x) >= norm3(y) ? x : y;
    return scale3(v, 1.0 / norm3(v));
}

}  // namespace

ChshAnalysis chsh_analyze(const CMat& rho) {
    require(rho.square() && rho.rows() == 4, "CHSH analysis needs a two-qubit state");
    double T[3][3];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t idx[2] = {i + 1, j + 1};
            T[i][j] = pauli_component(rho, idx, 2);
        }

    CMat tt(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += T[k][i] * T[k][j];
            tt(i, j) = s;
        }
    EigenSystem es = hermitian_spectrum(tt);
    double l1 = std::max(0.0, es.values[0]), l2 = std::max(0.0, es.values[1]);

    ChshAnalysis out;
    out.M = l1 + l2;
    out.B = std::sqrt(std::max(0.0, std::sqrt(out.M) - 1.0));
    out.max_value = 2.0 * std::sqrt(out.M);

    Vec3 u1 = real_column(es.vectors, 0);
    Vec3 u2 = real_column(es.vectors, 1);
    u2 = add3(u2, u1, -dot3(u2, u1));  // orthogonalize against u1 (degenerate case)
    u2 = scale3(u2, 1.0 / norm3(u2));

    double ct = 1.0, st = 0.0;
    if (out.M > 1e-24) {
        ct = std::sqrt(l1 / out.M);
        st = std::sqrt(l2 / out.M);
    }
    auto apply_t = [&](const Vec3& v) {
        Vec3 w{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) w[i] += T[i][j] * v[j];
        return w;
    };
    auto unit_or = [&](Vec3 v, const Vec3& fallback) {
        double nv = norm3(v);
        return nv > 1e-12 ? scale3(v, 1.0 / nv) : fallback;
    };
    Vec3 a1 = unit_or(apply_t(u1), u1);
    Vec3 a2 = unit_or(apply_t(u2), u2);
    Vec3 b1 = add3(scale3(u1, ct), u2, st);
    Vec3 b2 = add3(scale3(u1, ct), u2, -st);

    out.optimal.site.resize(2);
    out.optimal.site[0][0] = a1;
    out.optimal.site[0][1] = a2;
    out.optimal.site[1][0] = b1;
    out.optimal.site[1][1] = b2;
    return out;
}

double chsh_M(const CMat& rho) { return chsh_analyze(rho).M; }
double chsh_B(const CMat& rho) { return chsh_analyze(rho).B; }

WwzbResult wwzb_check(const std::vector<double>& E, std::size_t n) {
    require(n >= 1 && n <= 6, "WWZB series supports 1..6 sites");
    require(E.size() == (std::size_t{1} << n), "correlation table has wrong size");
    const std::size_t count = E.size();
    WwzbResult out;
    out.bound = static_cast<double>(count);
    for (std::size_t s = 0; s < count; ++s) {
        double f = 0.0;
        for (std::size_t k = 0; k < count; ++k)
            f += (__builtin_popcountll(k & s) & 1) ? -E[k] : E[k];
        out.lhs += std::abs(f);
    }
    out.pass = out.lhs <= out.bound + 1e-9;
    return out;
}

std::vector<double> correlation_table(const CMat& rho, const BellSettings& settings) {
    settings.validate();
    const std::size_t n = settings.site.size();
    require(n <= 6, "correlation table supports at most 6 sites");
    require(rho.square() && rho.rows() == (std::size_t{1} << n),
            "state dimension is not 2^n");
    std::vector<double> E(std::size_t{1} << n);
    std::vector<Vec3> axes(n);
    for (std::size_t k = 0; k < E.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j)
            axes[j] = settings.site[j][(k >> (n - 1 - j)) & 1];
        E[k] = correlation_value(rho, axes);
    }
    return E;
}

double correlation_value(const CMat& rho, const std::vector<Vec3>& axes) {
    const std::size_t n = axes.size();
    require(n >= 1 && n <= 6, "correlation value supports 1..6 sites");
    require(rho.square() && rho.rows() == (std::size_t{1} << n),
            "state dimension is not 2^n");
    CMat op = axis_observable(axes[0]);
    for (std::size_t j = 1; j < n; ++j) op = kron(op, axis_observable(axes[j]));
    return re_trace_prod(op, rho);
}

bool wwzb_tensor_check(const CorrelationTensor& t, const std::vector<Frame3>& frames) {
    const std::size_t n = t.n;
    require(n >= 1 && n <= 6, "tensor check supports 1..6 sites");
    require(frames.size() == n, "one frame per site required");
    for (const auto& f : frames) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < 3; ++k) s += f.r[k * 3 + i] * f.r[k * 3 + j];
                require(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-9,
                        "frames must be orthogonal matrices");
            }
    }

    // Rotate the 3^n correlation block per site and keep the {x,y}^n corner.
    const std::size_t corner = std::size_t{1} << n;
    std::vector<double> w(corner, 0.0);
    std::vector<std::size_t> a(n), b(n);
    std::size_t pow3 = 1;
    for (std::size_t j = 0; j < n; ++j) pow3 *= 3;
    for (std::size_t ka = 0; ka < corner; ++ka) {
        for (std::size_t j = 0; j < n; ++j) a[j] = (ka >> (n - 1 - j)) & 1;
        double acc = 0.0;
        for (std::size_t kb = 0; kb < pow3; ++kb) {
            std::size_t rem = kb;
            for (std::size_t j = n; j-- > 0;) {
                b[j] = rem % 3;
                rem /= 3;
            }
            double coef = 1.0;
            std::size_t flat = 0;
            for (std::size_t j = 0; j < n; ++j) {
                coef *= frames[j].r[a[j] * 3 + b[j]];
                flat = flat * 4 + (b[j] + 1);
            }
            acc += coef * t.t[flat];
        }
        w[ka] = std::abs(acc);
    }

    // Maximize the multilinear form over unit two-vectors per site by
    // alternating updates from a few fixed starts.
    const double inv = 1.0 / std::sqrt(2.0);
    const double starts[3][2] = {{1.0, 0.0}, {0.0, 1.0}, {inv, inv}};
    double best = 0.0;
    for (const auto& s0 : starts) {
        std::vector<std::array<double, 2>> c(n, {s0[0], s0[1]});
        double prev = -1.0;
        for (int iter = 0; iter < 200; ++iter) {
            for (std::size_t j = 0; j < n; ++j) {
                double g[2] = {0.0, 0.0};
                for (std::size_t k = 0; k < corner; ++k) {
                    double prod = 1.0;
                    for (std::size_t l = 0; l < n; ++l) {
                        if (l == j) continue;
                        prod *= c[l][(k >> (n - 1 - l)) & 1];
                    }
                    g[(k >> (n - 1 - j)) & 1] += w[k] * prod;
                }
                double gn = std::hypot(g[0], g[1]);
                if (gn > 1e-15) c[j] = {g[0] / gn, g[1] / gn};
            }
            double f = 0.0;
            for (std::size_t k = 0; k < corner; ++k) {
                double prod = w[k];
                for (std::size_t l = 0; l < n; ++l) prod *= c[l][(k >> (n - 1 - l)) & 1];
                f += prod;
            }
            if (f - prev < 1e-13) {
                prev = f;
                break;
            }
            prev = f;
        }
        best = std::max(best, prev);
    }
    return best <= 1.0 + 1e-9;
}

CMat avn_operator() {
    auto term = [](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return kron(kron(pauli(a), pauli(b)), kron(pauli(c), pauli(d)));
    };
    CMat o(16, 16);
    o -= term(3, 0, 3, 0);
    o -= term(0, 3, 0, 3);
    o -= term(1, 0, 1, 0);
    o -= term(0, 1, 0, 1);
    o += term(3, 3, 3, 3);
    o += term(1, 1, 1, 1);
    o += term(3, 1, 3, 1);
    o += term(1, 3, 1, 3);
    o += term(2, 2, 2, 2);
    return o;
}

double ghz_avn_value(const State& s) {
    require(s.dims == Dims({2, 2, 2, 2}), "the operator acts on four qubits");
    return re_trace_prod(avn_operator(), s.density());
}

TonerResult toner_monogamy(const CMat& rho, const BellSettings& settingsAB,
                           const BellSettings& settingsAC) {
    require(rho.square() && rho.rows() == 8, "monogamy check needs three qubits");
    const Dims d3 = {2, 2, 2};
    TonerResult out;
    out.vAB = bell_chsh_value(partial_trace(rho, d3, {0, 1}), settingsAB);
    out.vAC = bell_chsh_value(partial_trace(rho, d3, {0, 2}), settingsAC);
    out.sum = std::abs(out.vAB) + std::abs(out.vAC);
    out.pass = out.sum <= 4.0 + 1e-9;
    return out;
}

}  // namespace qent
