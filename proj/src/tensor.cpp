#include "qent/tensor.hpp"

#include <algorithm>
#include <string>

namespace qent {

std::size_t dims_product(const Dims& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) {
        require(d >= 1, "subsystem dimension must be >= 1");
        p *= d;
        require(p <= kMaxSide, "total dimension exceeds 4096");
    }
    return p;
}

void check_dims_match(const Dims& dims, std::size_t dim, const char* where) {
    if (dims_product(dims) != dim)
        throw_contract(std::string(where) + ": dims product does not match state dimension");
}

void unravel(std::size_t flat, const Dims& dims, std::size_t* digits) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = flat % dims[k];
        flat /= dims[k];
    }
}

std::size_t ravel(const std::size_t* digits, const Dims& dims) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
    return flat;
}

namespace {

void check_subset(const std::vector<std::size_t>& s, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        require(s[i] < n, std::string(what) + ": subsystem index out of range");
        if (i) require(s[i] > s[i - 1], std::string(what) + ": indices must be strictly increasing");
    }
}

}  // namespace

namespace serial {

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t rb = 0; rb < b.rows(); ++rb)
            for (std::size_t ca = 0; ca < a.cols(); ++ca)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
    return out;
}

CMat partial_trace(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& keep) {
    require(rho.square(), "partial_trace needs a square matrix");
    check_dims_match(dims, rho.rows(), "partial_trace");
    check_subset(keep, dims.size(), "partial_trace keep");

    std::vector<std::size_t> traced;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!std::binary_search(keep.begin(), keep.end(), k)) traced.push_back(k);

    Dims kdims, tdims;
    for (std::size_t k : keep) kdims.push_back(dims[k]);
    for (std::size_t k : traced) tdims.push_back(dims[k]);
    const std::size_t kd = dims_product(kdims);
    const std::size_t td = dims_product(tdims);

    CMat out(kd, kd);
    std::vector<std::size_t> kr(keep.size()), kc(keep.size()), tg(traced.size()),
        full(dims.size());
    for (std::size_t r = 0; r < kd; ++r) {
        unravel(r, kdims, kr.data());
        for (std::size_t c = 0; c < kd; ++c) {
            unravel(c, kdims, kc.data());
            cplx s = 0.0;
            for (std::size_t t = 0; t < td; ++t) {
                unravel(t, tdims, tg.data());
                for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = kr[i];
                for (std::size_t i = 0; i < traced.size(); ++i) full[traced[i]] = tg[i];
                std::size_t fr = ravel(full.data(), dims);
                for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = kc[i];
                std::size_t fc = ravel(full.data(), dims);
                s += rho(fr, fc);
            }
            out(r, c) = s;
        }
    }
    return out;
}

CMat partial_transpose(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& which) {
    require(rho.square(), "partial_transpose needs a square matrix");
    check_dims_match(dims, rho.rows(), "partial_transpose");
    check_subset(which, dims.size(), "partial_transpose which");

    const std::size_t d = rho.rows();
    CMat out(d, d);
    std::vector<std::size_t> gr(dims.size()), gc(dims.size());
    for (std::size_t r = 0; r < d; ++r) {
        unravel(r, dims, gr.data());
        for (std::size_t c = 0; c < d; ++c) {
            unravel(c, dims, gc.data());
            std::vector<std::size_t> sr = gr, sc = gc;
            for (std::size_t k : which) std::swap(sr[k], sc[k]);
            out(r, c) = rho(ravel(sr.data(), dims), ravel(sc.data(), dims));
        }
    }
    return out;
}

CMat realign(const CMat& rho, std::size_t da, std::size_t db) {
    require(rho.square() && rho.rows() == da * db, "realign: dims do not match");
    CMat out(da * da, db * db);
    for (std::size_t m = 0; m < da; ++m)
        for (std::size_t mu = 0; mu < da; ++mu)
            for (std::size_t n = 0; n < db; ++n)
                for (std::size_t nu = 0; nu < db; ++nu)
                    out(m * da + mu, n * db + nu) = rho(m * db + n, mu * db + nu);
    return out;
}

}  // namespace serial

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(out.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const std::size_t ra = static_cast<std::size_t>(r) / b.rows();
        const std::size_t rb = static_cast<std::size_t>(r) % b.rows();
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const cplx av = a(ra, ca);
            for (std::size_t cb = 0; cb < b.cols(); ++cb)
                out(r, ca * b.cols() + cb) = av * b(rb, cb);
        }
    }
    return out;
}

std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

CMat partial_trace(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& keep) {
    require(rho.square(), "partial_trace needs a square matrix");
    check_dims_match(dims, rho.rows(), "partial_trace");
    check_subset(keep, dims.size(), "partial_trace keep");

    std::vector<std::size_t> traced;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!std::binary_search(keep.begin(), keep.end(), k)) traced.push_back(k);

    Dims kdims, tdims;
    for (std::size_t k : keep) kdims.push_back(dims[k]);
    for (std::size_t k : traced) tdims.push_back(dims[k]);
    const std::size_t kd = dims_product(kdims);
    const std::size_t td = dims_product(tdims);

    CMat out(kd, kd);
    const std::ptrdiff_t kdp = static_cast<std::ptrdiff_t>(kd);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < kdp; ++r) {
        std::vector<std::size_t> kr(keep.size()), kc(keep.size()), tg(traced.size()),
            full(dims.size());
        unravel(static_cast<std::size_t>(r), kdims, kr.data());
        for (std::size_t c = 0; c < kd; ++c) {
            unravel(c, kdims, kc.data());
            cplx s = 0.0;
            for (std::size_t t = 0; t < td; ++t) {
                unravel(t, tdims, tg.data());
                for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = kr[i];
                for (std::size_t i = 0; i < traced.size(); ++i) full[traced[i]] = tg[i];
                std::size_t fr = ravel(full.data(), dims);
                for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = kc[i];
                std::size_t fc = ravel(full.data(), dims);
                s += rho(fr, fc);
            }
            out(r, c) = s;
        }
    }
    return out;
}

CMat partial_transpose(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& which) {
    require(rho.square(), "partial_transpose needs a square matrix");
    check_dims_match(dims, rho.rows(), "partial_transpose");
    check_subset(which, dims.size(), "partial_transpose which");

    const std::size_t d = rho.rows();
    CMat out(d, d);
    const std::ptrdiff_t dp = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < dp; ++r) {
        std::vector<std::size_t> gr(dims.size()), gc(dims.size()), sr(dims.size()),
            sc(dims.size());
        unravel(static_cast<std::size_t>(r), dims, gr.data());
        for (std::size_t c = 0; c < d; ++c) {
            unravel(c, dims, gc.data());
            sr = gr;
            sc = gc;
            for (std::size_t k : which) std::swap(sr[k], sc[k]);
            out(r, c) = rho(ravel(sr.data(), dims), ravel(sc.data(), dims));
        }
    }
    return out;
}

CMat realign(const CMat& rho, std::size_t da, std::size_t db) {
    require(rho.square() && rho.rows() == da * db, "realign: dims do not match");
    CMat out(da * da, db * db);
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(da * da);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const std::size_t m = static_cast<std::size_t>(r) / da;
        const std::size_t mu = static_cast<std::size_t>(r) % da;
        for (std::size_t n = 0; n < db; ++n)
            for (std::size_t nu = 0; nu < db; ++nu)
                out(r, n * db + nu) = rho(m * db + n, mu * db + nu);
    }
    return out;
}

std::vector<cplx> permute_systems_vec(const std::vector<cplx>& psi, const Dims& dims,
                                      const std::vector<std::size_t>& perm) {
    check_dims_match(dims, psi.size(), "permute_systems_vec");
    require(perm.size() == dims.size(), "permutation length mismatch");
    std::vector<bool> seen(dims.size(), false);
    for (std::size_t p : perm) {
        require(p < dims.size() && !seen[p], "invalid subsystem permutation");
        seen[p] = true;
    }

    Dims ndims(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) ndims[k] = dims[perm[k]];
    std::vector<cplx> out(psi.size());
    std::vector<std::size_t> g(dims.size()), o(dims.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        unravel(i, dims, g.data());
        for (std::size_t k = 0; k < dims.size(); ++k) o[k] = g[perm[k]];
        out[ravel(o.data(), ndims)] = psi[i];
    }
    return out;
}

CMat permute_systems(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& perm) {
    require(rho.square(), "permute_systems needs a square matrix");
    check_dims_match(dims, rho.rows(), "permute_systems");
    require(perm.size() == dims.size(), "permutation length mismatch");
    std::vector<bool> seen(dims.size(), false);
    for (std::size_t p : perm) {
        require(p < dims.size() && !seen[p], "invalid subsystem permutation");
        seen[p] = true;
    }

    Dims ndims(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) ndims[k] = dims[perm[k]];
    const std::size_t d = rho.rows();
    CMat out(d, d);
    const std::ptrdiff_t dp = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < dp; ++r) {
        std::vector<std::size_t> gr(dims.size()), gc(dims.size()), orow(dims.size()),
            ocol(dims.size());
        unravel(static_cast<std::size_t>(r), dims, gr.data());
        std::size_t nr = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) orow[k] = gr[perm[k]];
        nr = ravel(orow.data(), ndims);
        for (std::size_t c = 0; c < d; ++c) {
            unravel(c, dims, gc.data());
            for (std::size_t k = 0; k < dims.size(); ++k) ocol[k] = gc[perm[k]];
            out(nr, ravel(ocol.data(), ndims)) = rho(r, c);
        }
    }
    return out;
}

CMat apply_slot_permutation(const CMat& rho, const Dims& dims,
                            const std::vector<std::size_t>& slot_perm) {
    require(rho.square(), "apply_slot_permutation needs a square matrix");
    check_dims_match(dims, rho.rows(), "apply_slot_permutation");
    const std::size_t n = dims.size();
    require(slot_perm.size() == 2 * n, "slot permutation must cover 2n slots");
    std::vector<bool> seen(2 * n, false);
    for (std::size_t p : slot_perm) {
        require(p < 2 * n && !seen[p], "invalid slot permutation");
        seen[p] = true;
    }

    // Source slot s carries dims[s % n]; output slot s carries the dim of its
    // source slot.
    Dims rdims(n), cdims(n);
    for (std::size_t s = 0; s < n; ++s) rdims[s] = dims[slot_perm[s] % n];
    for (std::size_t s = 0; s < n; ++s) cdims[s] = dims[slot_perm[n + s] % n];

    CMat out(dims_product(rdims), dims_product(cdims));
    const std::size_t d = rho.rows();
    const std::ptrdiff_t dp = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < dp; ++r) {
        std::vector<std::size_t> v(2 * n), orow(n), ocol(n);
        unravel(static_cast<std::size_t>(r), dims, v.data());
        for (std::size_t c = 0; c < d; ++c) {
            unravel(c, dims, v.data() + n);
            for (std::size_t s = 0; s < n; ++s) orow[s] = v[slot_perm[s]];
            for (std::size_t s = 0; s < n; ++s) ocol[s] = v[slot_perm[n + s]];
            out(ravel(orow.data(), rdims), ravel(ocol.data(), cdims)) = rho(r, c);
        }
    }
    return out;
}

}  // namespace qent
