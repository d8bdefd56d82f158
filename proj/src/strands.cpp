#include "toric/strands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "toric/rng.hpp"

namespace toric {
namespace {

std::vector<std::vector<int>> subsets_lex(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Depth-first from the smallest element yields lexicographic order.
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string wedge_label(const std::vector<int>& subset, const Point& u) {
    std::string s;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        if (j) s += "^";
        s += "e" + std::to_string(subset[j] + 1);
    }
    if (s.empty()) s = "1";
    return s + ":" + point_str(u);
}

}  // namespace

int nu0_projective(int n, int d, int gamma) {
    if (n < 2 || d < 1) throw UsageError("nu0 needs n >= 2 and d >= 1");
    return std::max((n - 2) * d, (n - 1) * d - gamma);
}

int nu0_multiprojective(const std::vector<int>& degrees, int gamma) {
    int s = 0;
    for (int d : degrees) {
        if (d < 1) throw UsageError("all coordinate degrees must be >= 1");
        s += d;
    }
    return s - gamma;
}

std::vector<std::vector<GradedElement>> syzygy_basis(
    const std::vector<GradedElement>& h, int nu) {
    if (h.empty()) throw UsageError("no elements to find syzygies of");
    const RingPtr& ring = h[0].ring;
    int d = h[0].degree;
    for (const GradedElement& e : h) {
        if (e.ring != ring) throw UsageError("syzygy elements from different rings");
        if (e.degree != d) throw UsageError("syzygy elements of mixed degree");
    }
    if (nu < 0) throw UsageError("negative syzygy degree");
    const std::vector<Point>& bnu = ring->basis(nu);
    const std::vector<Point>& bd = ring->basis(d);
    std::size_t hn = bnu.size();
    QMat mult(ring->hilbert(nu + d), h.size() * hn);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t u = 0; u < hn; ++u)
            for (std::size_t v = 0; v < bd.size(); ++v) {
                if (h[i].coeffs[v] == 0) continue;
                Point w(ring->dim());
                for (int k = 0; k < ring->dim(); ++k) w[k] = bnu[u][k] + bd[v][k];
                mult.at(ring->index_of(nu + d, w), i * hn + u) += h[i].coeffs[v];
            }
    std::vector<std::vector<GradedElement>> out;
    for (const std::vector<Rat>& vec : kernel_basis(std::move(mult))) {
        std::vector<GradedElement> syz;
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::vector<Rat> coeffs(vec.begin() + i * hn, vec.begin() + (i + 1) * hn);
            syz.push_back(GradedElement{ring, nu, std::move(coeffs)});
        }
        out.push_back(std::move(syz));
    }
    return out;
}

LinearFormMatrix build_matrix_projective(const std::vector<GradedElement>& h,
                                         int nu, const RosterPtr& x_roster) {
    if (h.size() != x_roster->size())
        throw UsageError("X-roster size must match the element count");
    auto syzygies = syzygy_basis(h, nu);
    const RingPtr& ring = h[0].ring;
    LinearFormMatrix m;
    m.x_roster = x_roster;
    m.rows = static_cast<std::size_t>(ring->hilbert(nu));
    m.cols = syzygies.size();
    m.row_labels = ring->basis(nu);
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < syzygies.size(); ++c) {
        m.col_labels.push_back("syz" + std::to_string(c + 1));
        for (std::size_t r = 0; r < m.rows; ++r) {
            LinearForm form;
            for (std::size_t i = 0; i < h.size(); ++i)
                form.add(static_cast<int>(i), syzygies[c][i].coeffs[r]);
            if (!form.is_zero()) m.columns[c].push_back({r, std::move(form)});
        }
    }
    return m;
}

KoszulStrand build_koszul_strand(const std::vector<GradedElement>& fg, int nu,
                                 const RosterPtr& x_roster) {
    if (fg.empty() || fg.size() % 2 != 0)
        throw UsageError("expected alternating numerator/denominator elements");
    int n = static_cast<int>(fg.size() / 2);
    if (x_roster->size() != 2 * static_cast<std::size_t>(n))
        throw UsageError("X-roster size must be twice the coordinate count");
    const RingPtr& ring = fg[0].ring;
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
        if (fg[2 * i].ring != ring || fg[2 * i + 1].ring != ring)
            throw UsageError("strand elements from different rings");
        if (fg[2 * i].degree != fg[2 * i + 1].degree)
            throw UsageError("numerator/denominator degree mismatch");
        d[i] = fg[2 * i].degree;
    }

    KoszulStrand strand;
    strand.nu = nu;

    // Per homological position: the lexicographic subset list, each subset's
    // strand degree nu - d_alpha, its column offset, and labels.
    struct Layer {
        std::vector<std::vector<int>> subsets;
        std::vector<int> deg;               // nu - d_alpha
        std::vector<std::size_t> offset;    // first index of the block
        std::map<std::vector<int>, std::size_t> block_of;
        long total = 0;
    };
    std::vector<Layer> layers(n + 1);
    for (int p = 0; p <= n; ++p) {
        Layer& lay = layers[p];
        lay.subsets = subsets_lex(n, p);
        for (std::size_t b = 0; b < lay.subsets.size(); ++b) {
            int da = 0;
            for (int i : lay.subsets[b]) da += d[i];
            lay.deg.push_back(nu - da);
            lay.offset.push_back(static_cast<std::size_t>(lay.total));
            lay.block_of[lay.subsets[b]] = b;
            lay.total += ring->hilbert(nu - da);
        }
        strand.terms.push_back(lay.total);
    }

    for (int p = 1; p <= n; ++p) {
        const Layer& src = layers[p];
        const Layer& dst = layers[p - 1];
        LinearFormMatrix m;
        m.x_roster = x_roster;
        m.rows = static_cast<std::size_t>(dst.total);
        m.cols = static_cast<std::size_t>(src.total);
        m.columns.resize(m.cols);
        if (p == 1) m.row_labels = ring->basis(nu);
        for (std::size_t b = 0; b < src.subsets.size(); ++b) {
            const std::vector<int>& alpha = src.subsets[b];
            if (src.deg[b] < 0) continue;
            const std::vector<Point>& bu = ring->basis(src.deg[b]);
            for (std::size_t ui = 0; ui < bu.size(); ++ui) {
                std::size_t col = src.offset[b] + ui;
                m.col_labels.push_back(wedge_label(alpha, bu[ui]));
                std::map<std::size_t, LinearForm> cells;
                for (std::size_t j = 0; j < alpha.size(); ++j) {
                    int i = alpha[j];
                    std::vector<int> beta = alpha;
                    beta.erase(beta.begin() + j);
                    std::size_t db = dst.block_of.at(beta);
                    int deg_t = dst.deg[db];
                    int sign = (j % 2 == 0) ? 1 : -1;
                    const std::vector<Point>& bv = ring->basis(d[i]);
                    for (int part = 0; part < 2; ++part) {
                        // part 0: Y_i * f_i; part 1: -X_i * g_i.
                        const GradedElement& e = fg[2 * i + part];
                        int var = 2 * i + (part == 0 ? 1 : 0);
                        int s = (part == 0 ? sign : -sign);
                        for (std::size_t vi = 0; vi < bv.size(); ++vi) {
                            if (e.coeffs[vi] == 0) continue;
                            Point w(ring->dim());
                            for (int k = 0; k < ring->dim(); ++k)
                                w[k] = bu[ui][k] + bv[vi][k];
                            std::size_t row =
                                dst.offset[db] + ring->index_of(deg_t, w);
                            cells[row].add(var, Rat(s) * e.coeffs[vi]);
                        }
                    }
                }
                for (auto& [row, form] : cells)
                    if (!form.is_zero()) m.columns[col].push_back({row, std::move(form)});
            }
        }
        strand.maps.push_back(std::move(m));
    }
    return strand;
}

std::size_t generic_rank(const LinearFormMatrix& m, std::uint64_t seed) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t best = 0;
    for (int t = 0; t < 3; ++t) {
        std::vector<Rat> x = rng.nonzero_point(static_cast<int>(m.x_roster->size()));
        best = std::max(best, rank_hybrid(m.evaluate(x)));
        if (best == std::min(m.rows, m.cols)) break;
    }
    return best;
}

}  // namespace toric
