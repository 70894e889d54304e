#include "shapespace/bundles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "shapespace/banded.hpp"

namespace shapespace {

TangentField vertical_field(const FrameData& frame, const VerticalCoefficient& m) {
    const std::size_t n = frame.tangent.size();
    if (m.size() != n) {
        throw std::invalid_argument("vertical coefficient has " +
                                    std::to_string(m.size()) +
                                    " entries but the curve has " +
                                    std::to_string(n) + " samples");
    }
    TangentField v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = frame.tangent[i] * m[i];
    return v;
}

TangentField vertical_field(const SampledCurve& curve, const VerticalCoefficient& m) {
    return vertical_field(compute_frame(curve), m);
}

TangentField normal_project(const FrameData& frame, const TangentField& h) {
    const std::size_t n = frame.normal.size();
    if (h.size() != n) {
        throw std::invalid_argument("tangent field size does not match the frame");
    }
    TangentField w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = frame.normal[i] * dot(h[i], frame.normal[i]);
    }
    return w;
}

TangentField normal_project(const SampledCurve& curve, const TangentField& h) {
    validate_field(curve, h);
    return normal_project(compute_frame(curve), h);
}

// ---------------------------------------------------------------------------
// Horizontal projection.
//
// Minimizing ||h - m t-hat||^2 in the elastic metric over the coefficient m
// gives the normal equations A m = r with A_jk the inner product of the
// coordinate vertical fields e_j t-hat and e_k t-hat. The stencil derivative
// at sample i only sees m at the stencil neighbours, so A couples indices
// two apart: the even and odd subsequences form independent (cyclic)
// tridiagonal chains. See docs/horizontal_projection.md for the derivation.
// ---------------------------------------------------------------------------

namespace {

struct GramBands {
    std::vector<double> diag;  // A[j][j]
    std::vector<double> sub;   // A[j][j-2] (wrapping when closed)
    std::vector<double> rhs;   // r[j]
};

GramBands assemble_gram(const FrameData& frame, const TangentField& h,
                        const ElasticParams& p) {
    const std::size_t n = frame.tangent.size();
    GramBands g;
    g.diag.assign(n, 0.0);
    g.sub.assign(n, 0.0);
    g.rhs.assign(n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jn = frame.next[i];
        const std::size_t jp = frame.prev[i];
        const Vec2 d = (h[jn] - h[jp]) / frame.span[i];
        const double qt = dot(d, frame.tangent[i]);
        const double qn = dot(d, frame.normal[i]);

        // Coefficients of m_next and m_prev in the stencil derivative of
        // m t-hat at sample i. One-sided endpoint stencils of open curves
        // produce couplings onto the fixed boundary coefficients; those rows
        // and bands are simply never read by the open-chain solver.
        const Vec2 cp = frame.tangent[jn] / frame.span[i];
        const Vec2 cm = frame.tangent[jp] * (-1.0 / frame.span[i]);
        const double pt = dot(cp, frame.tangent[i]);
        const double pn = dot(cp, frame.normal[i]);
        const double mt = dot(cm, frame.tangent[i]);
        const double mn = dot(cm, frame.normal[i]);

        const double w = frame.ds[i];
        g.diag[jn] += w * (p.a * pt * pt + p.b * pn * pn);
        g.diag[jp] += w * (p.a * mt * mt + p.b * mn * mn);
        g.sub[jn] += w * (p.a * pt * mt + p.b * pn * mn);  // A[next][prev]
        g.rhs[jn] += w * (p.a * qt * pt + p.b * qn * pn);
        g.rhs[jp] += w * (p.a * qt * mt + p.b * qn * mn);
    }
    return g;
}

// Solves A m = r for a closed curve by splitting into the parity chains.
std::vector<double> solve_gram_closed(const GramBands& g) {
    const std::size_t n = g.diag.size();
    std::vector<double> m(n, 0.0);
    if (n % 2 == 0) {
        // Even n: the even and odd index chains are independent cycles.
        for (std::size_t parity = 0; parity < 2; ++parity) {
            const std::size_t len = n / 2;
            std::vector<double> lower(len), diag(len), upper(len), rhs(len);
            for (std::size_t k = 0; k < len; ++k) {
                const std::size_t j = 2 * k + parity;
                diag[k] = g.diag[j];
                lower[k] = g.sub[j];                 // A[j][j-2]
                upper[k] = g.sub[(j + 2) % n];       // A[j][j+2] by symmetry
                rhs[k] = g.rhs[j];
            }
            const std::vector<double> x = solve_cyclic_tridiagonal(lower, diag, upper, rhs);
            for (std::size_t k = 0; k < len; ++k) m[2 * k + parity] = x[k];
        }
    } else {
        // Odd n: stepping by two visits every index once, giving one cycle.
        std::vector<double> lower(n), diag(n), upper(n), rhs(n);
        std::vector<std::size_t> order(n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t j = (2 * k) % n;
            order[k] = j;
            diag[k] = g.diag[j];
            lower[k] = g.sub[j];
            upper[k] = g.sub[(j + 2) % n];
            rhs[k] = g.rhs[j];
        }
        const std::vector<double> x = solve_cyclic_tridiagonal(lower, diag, upper, rhs);
        for (std::size_t k = 0; k < n; ++k) m[order[k]] = x[k];
    }
    return m;
}

// Open curve: the endpoint coefficients are fixed to zero, leaving two plain
// tridiagonal chains over the interior odd / even indices.
std::vector<double> solve_gram_open(const GramBands& g) {
    const std::size_t n = g.diag.size();
    std::vector<double> m(n, 0.0);
    for (std::size_t start = 1; start <= 2; ++start) {
        std::vector<std::size_t> idx;
        for (std::size_t j = start; j <= n - 2; j += 2) idx.push_back(j);
        if (idx.empty()) continue;
        const std::size_t len = idx.size();
        std::vector<double> lower(len, 0.0), diag(len), upper(len, 0.0), rhs(len);
        for (std::size_t k = 0; k < len; ++k) {
            const std::size_t j = idx[k];
            diag[k] = g.diag[j];
            rhs[k] = g.rhs[j];
            if (k > 0) lower[k] = g.sub[j];
            if (k + 1 < len) upper[k] = g.sub[j + 2];
        }
        std::vector<double> x;
        if (len == 1) {
            if (std::abs(diag[0]) < 1e-300) {
                throw std::domain_error("horizontal projection: singular system");
            }
            x = {rhs[0] / diag[0]};
        } else {
            x = solve_tridiagonal(lower, diag, upper, rhs);
        }
        for (std::size_t k = 0; k < len; ++k) m[idx[k]] = x[k];
    }
    return m;
}

}  // namespace

HorizontalSplit horizontal_project(const SampledCurve& curve,
                                   const FrameData& frame, const TangentField& h,
                                   const ElasticParams& p) {
    validate_params(p);
    validate_field(curve, h);
    const GramBands g = assemble_gram(frame, h, p);
    HorizontalSplit split;
    split.m = curve.closed ? solve_gram_closed(g) : solve_gram_open(g);
    const std::size_t n = h.size();
    split.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        split.w[i] = h[i] - frame.tangent[i] * split.m[i];
    }
    return split;
}

HorizontalSplit horizontal_project(const SampledCurve& curve, const TangentField& h,
                                   const ElasticParams& p) {
    return horizontal_project(curve, compute_frame(curve), h, p);
}

SectionSplit section_tangent_project(const SampledCurve& curve,
                                     const TangentField& h) {
    validate_field(curve, h);
    const FrameData frame = compute_frame(curve);
    const std::size_t n = curve.points.size();

    double lmin = frame.chord[0], lmax = frame.chord[0];
    for (const double l : frame.chord) {
        lmin = std::min(lmin, l);
        lmax = std::max(lmax, l);
    }
    const double mean = frame.total_length / static_cast<double>(frame.chord.size());
    if ((lmax - lmin) / mean > 1e-6) {
        throw std::invalid_argument(
            "section projection requires an arc-length parameterized curve "
            "(constant chords within 1e-6 relative)");
    }

    // Tangential derivative of h at each sample.
    std::vector<double> qt(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 d = (h[frame.next[i]] - h[frame.prev[i]]) / frame.span[i];
        qt[i] = dot(d, frame.tangent[i]);
    }

    SectionSplit split;
    split.residual = 0.0;
    if (curve.closed) {
        // A closed arc-length curve keeps one tangential degree of freedom,
        // the base-point rotation; remove its mean before integrating so the
        // cumulative coefficient closes up, and report it.
        double mean_qt = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean_qt += qt[i] * frame.ds[i];
        mean_qt /= frame.total_length;
        split.residual = mean_qt;
        for (std::size_t i = 0; i < n; ++i) qt[i] -= mean_qt;
    }

    split.m.assign(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        split.m[i + 1] = split.m[i] + 0.5 * (qt[i] + qt[i + 1]) * frame.chord[i];
    }
    split.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        split.w[i] = h[i] - frame.tangent[i] * split.m[i];
    }
    return split;
}

double gauge_inner(const FrameData& frame, const TangentField& h1,
                   const TangentField& h2, const ElasticParams& p) {
    return elastic_inner(frame, normal_project(frame, h1),
                         normal_project(frame, h2), p);
}

double gauge_inner(const SampledCurve& curve, const TangentField& h1,
                   const TangentField& h2, const ElasticParams& p) {
    validate_field(curve, h1);
    validate_field(curve, h2);
    return gauge_inner(compute_frame(curve), h1, h2, p);
}

}  // namespace shapespace
