#include "ngc/condense.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ngc/linalg.hpp"

namespace ngc {

std::vector<int> find_invertibles(const ModularData& md, double tol) {
    std::vector<int> out;
    for (int i = 0; i < md.rank(); ++i)
        if (std::abs(md.dims(i) - 1.0) < tol) out.push_back(i);
    return out;
}

namespace {

std::vector<int> self_inverse_invertibles(const ModularData& md, const FusionTensor& N,
                                          cplx twist, double tol = 1e-6) {
    std::vector<int> out;
    for (int u : find_invertibles(md, tol)) {
        if (u == 0) continue;
        if (N(u, u, 0) == 1 && std::abs(md.twists(u) - twist) < tol) out.push_back(u);
    }
    return out;
}

}  // namespace

std::vector<int> find_bosons(const ModularData& md, const FusionTensor& N) {
    return self_inverse_invertibles(md, N, cplx(1, 0));
}

std::vector<int> find_fermions(const ModularData& md, const FusionTensor& N) {
    return self_inverse_invertibles(md, N, cplx(-1, 0));
}

std::vector<int> centralizer(const ModularData& md, const std::vector<int>& gens, double tol) {
    ComplexMatrix St = md.stilde();
    std::vector<int> out;
    for (int y = 0; y < md.rank(); ++y) {
        bool ok = true;
        for (int x : gens)
            if (std::abs(St(x, y) - md.dims(x) * md.dims(y)) >= tol) { ok = false; break; }
        if (ok) out.push_back(y);
    }
    return out;
}

OrbitStructure tensor_orbits(const ModularData& md, int u, const FusionTensor& N) {
    if (std::abs(md.dims(u) - 1.0) > 1e-6)
        throw std::invalid_argument("tensor_orbits: label is not invertible");
    OrbitStructure out;
    out.perm.resize(static_cast<std::size_t>(md.rank()));
    for (int x = 0; x < md.rank(); ++x) {
        int img = -1;
        for (int y = 0; y < md.rank(); ++y)
            if (N(u, x, y) != 0) {
                if (img != -1) throw std::runtime_error("tensor_orbits: fusion not a permutation");
                img = y;
            }
        out.perm[static_cast<std::size_t>(x)] = img;
    }
    for (int x = 0; x < md.rank(); ++x) {
        int y = out.perm[static_cast<std::size_t>(x)];
        if (y == x) out.fixed.push_back(x);
        else if (x < y) out.two_cycles.emplace_back(x, y);
    }
    return out;
}

ComplexMatrix PartialModularData::stilde(const ComplexVector& theta) const {
    ComplexMatrix S = base;
    int r = rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (param(i, j) >= 0) S(i, j) += coeff(i, j) * theta(param(i, j));
    return S;
}

ComplexVector PartialModularData::seed() const {
    // equal-split for type I x pair rows, quarter-split for pair x pair cells
    ComplexVector th = ComplexVector::Zero(num_params);
    for (const auto& sc : sums) {
        for (auto [i, j] : sc.cells) {
            if (param(i, j) >= 0 && coeff(i, j) != cplx(0, 0))
                th(param(i, j)) = sc.value / (static_cast<double>(sc.cells.size()) * coeff(i, j));
        }
    }
    return th;
}

PartialModularData condense(const ModularData& md, int boson) {
    FusionTensor N = verlinde_fusion(md);
    auto bosons = find_bosons(md, N);
    if (std::find(bosons.begin(), bosons.end(), boson) == bosons.end())
        throw std::invalid_argument("condense: label is not a boson");
    OrbitStructure orb = tensor_orbits(md, boson, N);
    std::vector<int> cent = centralizer(md, {boson});
    std::vector<bool> in_cent(static_cast<std::size_t>(md.rank()), false);
    for (int x : cent) in_cent[static_cast<std::size_t>(x)] = true;

    PartialModularData pmd;
    std::map<std::pair<int, int>, int> label_index;  // (parent, branch) -> condensed index
    std::vector<double> dims;
    std::vector<cplx> twists;
    for (int x : cent) {
        int y = orb.perm[static_cast<std::size_t>(x)];
        if (!in_cent[static_cast<std::size_t>(y)])
            throw std::runtime_error("condense: centralizer not orbit-closed");
        if (y == x) {
            // fixed point: splits; the (d+1)-family may not be fixed
            if (md.labels[static_cast<std::size_t>(x)].kind == SimpleLabel::Kind::B)
                throw std::runtime_error("condense: a dimension-(d+1) label is fixed by the boson");
            for (int br = 1; br <= 2; ++br) {
                label_index[{x, br}] = static_cast<int>(pmd.clabels.size());
                pmd.clabels.push_back({x, br});
                pmd.labels.push_back(SimpleLabel::opaque(
                    "(" + md.labels[static_cast<std::size_t>(x)].str() + ")_" + std::to_string(br)));
                dims.push_back(md.dims(x) / 2);
                twists.push_back(md.twists(x));
            }
        } else if (x < y) {
            label_index[{x, 0}] = static_cast<int>(pmd.clabels.size());
            pmd.clabels.push_back({x, 0});
            pmd.labels.push_back(
                SimpleLabel::opaque("F(" + md.labels[static_cast<std::size_t>(x)].str() + ")"));
            dims.push_back(md.dims(x));
            twists.push_back(md.twists(x));
        }
    }
    int r = static_cast<int>(pmd.clabels.size());
    pmd.dims = Eigen::Map<RealVector>(dims.data(), r);
    pmd.twists = Eigen::Map<ComplexVector>(twists.data(), r);
    pmd.lambda = md.lambda / 2;

    ComplexMatrix St = md.stilde();
    // known entries: NaN marks unknown for now
    ComplexMatrix known = ComplexMatrix::Constant(
        r, r, cplx(std::numeric_limits<double>::quiet_NaN(), 0));
    std::vector<int> invs;
    for (int i = 0; i < r; ++i)
        if (std::abs(pmd.dims(i) - 1.0) < 1e-9) invs.push_back(i);
    for (int i = 0; i < r; ++i) {
        const auto& li = pmd.clabels[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) {
            const auto& lj = pmd.clabels[static_cast<std::size_t>(j)];
            if (!li.type_two() && !lj.type_two())
                known(i, j) = St(li.parent, lj.parent);
            else if (!li.type_two() && std::abs(pmd.dims(i) - 1.0) < 1e-9 && lj.type_two())
                known(i, j) = St(li.parent, lj.parent) / 2.0;  // equal branch twists force a half-split
            else if (!lj.type_two() && std::abs(pmd.dims(j) - 1.0) < 1e-9 && li.type_two())
                known(i, j) = St(lj.parent, li.parent) / 2.0;
        }
    }

    // chi_u(Y) of condensed invertibles, from their (fully known) rows
    std::map<int, ComplexVector> chi;
    for (int u : invs) {
        ComplexVector row(r);
        for (int j = 0; j < r; ++j) row(j) = known(u, j) / pmd.dims(j);
        chi[u] = row;
    }
    // orbit-level fusion action of a condensed invertible on condensed labels
    std::map<int, OrbitStructure> uorb;
    for (int u : invs)
        uorb[u] = tensor_orbits(md, pmd.clabels[static_cast<std::size_t>(u)].parent, N);
    auto act_orbit = [&](int u, int parent) {
        int z = uorb[u].perm[static_cast<std::size_t>(parent)];
        if (!label_index.count({z, 0}) && !label_index.count({z, 1}))
            z = orb.perm[static_cast<std::size_t>(z)];  // take the orbit representative
        return z;
    };
    // transport words: every condensed label = word (x) base
    std::vector<int> word(static_cast<std::size_t>(r), -1), base(static_cast<std::size_t>(r), -1);
    for (int j = 0; j < r; ++j) {
        if (base[static_cast<std::size_t>(j)] != -1) continue;
        const auto& lj = pmd.clabels[static_cast<std::size_t>(j)];
        word[static_cast<std::size_t>(j)] = invs[0];
        base[static_cast<std::size_t>(j)] = j;
        if (!lj.type_two()) {
            for (int u : invs) {
                int z = act_orbit(u, lj.parent);
                auto it = label_index.find({z, 0});
                if (it == label_index.end()) continue;
                int k = it->second;
                if (base[static_cast<std::size_t>(k)] == -1) {
                    word[static_cast<std::size_t>(k)] = u;
                    base[static_cast<std::size_t>(k)] = j;
                }
            }
        } else {
            int j2 = label_index.at({lj.parent, 2});
            word[static_cast<std::size_t>(j2)] = invs[0];
            base[static_cast<std::size_t>(j2)] = j2;
            for (int u : invs) {
                int z = uorb[u].perm[static_cast<std::size_t>(lj.parent)];
                if (z == lj.parent || !label_index.count({z, 1})) continue;
                int k1 = label_index.at({z, 1});
                int k2 = label_index.at({z, 2});
                if (base[static_cast<std::size_t>(k1)] == -1 &&
                    base[static_cast<std::size_t>(k2)] == -1) {
                    word[static_cast<std::size_t>(k1)] = u;
                    base[static_cast<std::size_t>(k1)] = j;
                    word[static_cast<std::size_t>(k2)] = u;
                    base[static_cast<std::size_t>(k2)] = j2;
                }
            }
        }
    }

    // reduce every unknown cell to a base cell by invertible transport
    pmd.base = ComplexMatrix::Zero(r, r);
    pmd.coeff = ComplexMatrix::Zero(r, r);
    pmd.param = Eigen::MatrixXi::Constant(r, r, -1);
    std::map<std::pair<int, int>, int> cell_param;
    auto reduce_cell = [&](int i, int j) {
        int u = word[static_cast<std::size_t>(i)], bi = base[static_cast<std::size_t>(i)];
        int v = word[static_cast<std::size_t>(j)], bj = base[static_cast<std::size_t>(j)];
        cplx cf = chi[u](j) * chi[v](bi);
        return std::make_tuple(cf, std::min(bi, bj), std::max(bi, bj));
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!std::isnan(known(i, j).real())) {
                pmd.base(i, j) = known(i, j);
                continue;
            }
            auto [cf, bi, bj] = reduce_cell(i, j);
            if (!std::isnan(known(bi, bj).real())) {
                pmd.base(i, j) = cf * known(bi, bj);
            } else {
                auto key = std::make_pair(bi, bj);
                auto it = cell_param.find(key);
                if (it == cell_param.end())
                    it = cell_param.emplace(key, static_cast<int>(cell_param.size())).first;
                pmd.coeff(i, j) = cf;
                pmd.param(i, j) = it->second;
            }
        }
    pmd.num_params = static_cast<int>(cell_param.size());

    // sum constraints: type I rows against pairs, and pair-against-pair blocks
    std::vector<int> pair_parents;
    for (const auto& l : pmd.clabels)
        if (l.branch == 1) pair_parents.push_back(l.parent);
    for (int i = 0; i < r; ++i) {
        const auto& li = pmd.clabels[static_cast<std::size_t>(i)];
        if (li.type_two()) continue;
        for (int x : pair_parents) {
            PartialModularData::SumConstraint sc;
            sc.cells = {{i, label_index.at({x, 1})}, {i, label_index.at({x, 2})}};
            sc.value = St(li.parent, x);
            pmd.sums.push_back(std::move(sc));
        }
    }
    for (std::size_t a = 0; a < pair_parents.size(); ++a)
        for (std::size_t b2 = a; b2 < pair_parents.size(); ++b2) {
            int x = pair_parents[a], y = pair_parents[b2];
            PartialModularData::SumConstraint sc;
            for (int bx = 1; bx <= 2; ++bx)
                for (int by = 1; by <= 2; ++by)
                    sc.cells.push_back({label_index.at({x, bx}), label_index.at({y, by})});
            sc.value = St(x, y);
            pmd.sums.push_back(std::move(sc));
        }

    // orbit-level charge conjugation support for S^2
    ModularReport parent_rep;
    {
        ComplexMatrix S2 = md.S * md.S;
        parent_rep.dual.resize(static_cast<std::size_t>(md.rank()));
        for (int i = 0; i < md.rank(); ++i) {
            int best = 0;
            double bv = -1;
            for (int j = 0; j < md.rank(); ++j)
                if (std::abs(S2(i, j)) > bv) { bv = std::abs(S2(i, j)); best = j; }
            parent_rep.dual[static_cast<std::size_t>(i)] = best;
        }
    }
    pmd.s2_support.setConstant(r, r, false);
    for (int i = 0; i < r; ++i) {
        const auto& li = pmd.clabels[static_cast<std::size_t>(i)];
        int zdual = parent_rep.dual[static_cast<std::size_t>(li.parent)];
        for (int j = 0; j < r; ++j) {
            const auto& lj = pmd.clabels[static_cast<std::size_t>(j)];
            if (li.type_two() != lj.type_two()) continue;
            int p = lj.parent;
            if (p == zdual || orb.perm[static_cast<std::size_t>(p)] == zdual)
                pmd.s2_support(i, j) = true;
        }
    }
    // hypothesis pairs: parameter-bearing pairs that are orbit-self-dual
    for (int x : pair_parents) {
        int i1 = label_index.at({x, 1});
        if (base[static_cast<std::size_t>(i1)] != i1) continue;  // transported pair
        if (parent_rep.dual[static_cast<std::size_t>(x)] == x)
            pmd.hypothesis_pairs.emplace_back(i1, label_index.at({x, 2}));
    }
    return pmd;
}

namespace {

/// Lexicographic branch canonicalization: within each pair order branches by
/// their resolved S row; returns the relabeled data.
ModularData canonicalize_branches(const PartialModularData& pmd, ModularData md) {
    int r = md.rank();
    auto row_less = [&](int i, int j) {
        for (int k = 0; k < r; ++k) {
            cplx a = md.S(i, k), b = md.S(j, k);
            if (std::abs(a - b) < 1e-7) continue;
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        }
        return false;
    };
    for (int pass = 0; pass < 8; ++pass) {
        bool changed = false;
        for (int i = 0; i < r; ++i) {
            const auto& li = pmd.clabels[static_cast<std::size_t>(i)];
            if (li.branch != 1) continue;
            int j = i + 1;  // branches are adjacent by construction
            if (row_less(j, i)) {
                md.S.row(i).swap(md.S.row(j));
                md.S.col(i).swap(md.S.col(j));
                changed = true;
            }
        }
        if (!changed) break;
    }
    return md;
}

}  // namespace

const ModularData& ResolveResult::unique() const {
    if (num_survivors != 1)
        throw std::runtime_error("resolve_unknowns: " + std::to_string(num_survivors) +
                                 " surviving candidates (expected exactly 1)");
    return candidates.front().md;
}

ResolveResult resolve_unknowns(const PartialModularData& pmd, const ResolveOptions& opts) {
    int r = pmd.rank();
    int nh = static_cast<int>(pmd.hypothesis_pairs.size());
    std::mt19937_64 rng(opts.rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // residual over packed real parameters
    auto make_residual = [&](const std::vector<int>& hyp) {
        return [&, hyp](const ComplexVector& theta) {
            ComplexMatrix St = pmd.stilde(theta);
            ComplexMatrix S = St / pmd.lambda;
            ComplexMatrix U = S * S.adjoint() - ComplexMatrix::Identity(r, r);
            ComplexMatrix S2 = S * S;
            std::vector<cplx> out;
            out.reserve(static_cast<std::size_t>(r) * r);
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j) out.push_back(U(i, j));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) out.push_back(S(i, j) - S(j, i));
            for (const auto& sc : pmd.sums) {
                cplx acc = 0;
                for (auto [i, j] : sc.cells) acc += St(i, j);
                out.push_back(acc - sc.value);
            }
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (!pmd.s2_support(i, j)) out.push_back(S2(i, j));
            for (int k = 0; k < nh; ++k) {
                auto [i1, i2] = pmd.hypothesis_pairs[static_cast<std::size_t>(k)];
                if (hyp[static_cast<std::size_t>(k)] == 0) {  // self-dual branches
                    out.push_back(S2(i1, i1) - 1.0);
                    out.push_back(S2(i2, i2) - 1.0);
                } else {  // dual pair
                    out.push_back(S2(i1, i2) - 1.0);
                    out.push_back(S2(i2, i1) - 1.0);
                }
            }
            return Eigen::Map<ComplexVector>(out.data(), static_cast<int>(out.size())).eval();
        };
    };

    ComplexVector seed = pmd.seed();
    ResolveResult result;
    std::vector<ComplexVector> all_theta;
    for (int mask = 0; mask < (1 << nh); ++mask) {
        std::vector<int> hyp(static_cast<std::size_t>(nh));
        for (int k = 0; k < nh; ++k) hyp[static_cast<std::size_t>(k)] = (mask >> k) & 1;
        auto residual = make_residual(hyp);
        for (int s = 0; s < opts.starts_per_hypothesis; ++s) {
            ComplexVector x0 = seed;
            if (s > 0) {
                double scale = 0.5 + 1.0 * s;
                for (int i = 0; i < x0.size(); ++i)
                    x0(i) += scale * cplx(gauss(rng), gauss(rng));
            }
            NewtonResult nr = newton_polish(residual, x0, opts.newton_tol, 80);
            if (!nr.converged) continue;
            bool dup = false;
            for (const auto& t : all_theta)
                if ((t - nr.x).cwiseAbs().maxCoeff() < 1e-6) { dup = true; break; }
            if (dup) continue;
            all_theta.push_back(nr.x);

            ResolveCandidate cand;
            cand.theta = nr.x;
            cand.hypothesis = hyp;
            cand.md.labels = pmd.labels;
            cand.md.dims = pmd.dims;
            cand.md.twists = pmd.twists;
            cand.md.lambda = pmd.lambda;
            cand.md.S = pmd.stilde(nr.x) / pmd.lambda;
            cand.report = verify_modular(cand.md, opts.filter_tol);
            std::ostringstream why;
            if (cand.report.unitarity > opts.filter_tol) why << "unitarity " << cand.report.unitarity << "; ";
            if (cand.report.symmetry > opts.filter_tol) why << "symmetry " << cand.report.symmetry << "; ";
            if (cand.report.s2_permutation > opts.filter_tol)
                why << "S^2 not a permutation (" << cand.report.s2_permutation << "); ";
            if (cand.report.verlinde_integrality > 1e-4)
                why << "non-integral fusion (" << cand.report.verlinde_integrality << "); ";
            if (cand.report.verlinde_negativity > 0)
                why << "negative fusion coefficients; ";
            if (cand.report.balancing > opts.filter_tol)
                why << "balancing residual " << cand.report.balancing << "; ";
            cand.failure = why.str();
            cand.survives = cand.failure.empty();
            if (cand.survives) cand.md = canonicalize_branches(pmd, std::move(cand.md));
            result.candidates.push_back(std::move(cand));
        }
    }
    // dedup survivors that coincide after branch canonicalization
    std::vector<ResolveCandidate> final;
    for (auto& c : result.candidates) {
        if (!c.survives) { final.push_back(std::move(c)); continue; }
        bool dup = false;
        for (const auto& f : final)
            if (f.survives && (f.md.S - c.md.S).cwiseAbs().maxCoeff() < 1e-6) { dup = true; break; }
        if (!dup) final.push_back(std::move(c));
    }
    std::stable_sort(final.begin(), final.end(),
                     [](const ResolveCandidate& a, const ResolveCandidate& b) {
                         return a.survives > b.survives;
                     });
    result.candidates = std::move(final);
    result.num_survivors = 0;
    for (const auto& c : result.candidates) result.num_survivors += c.survives ? 1 : 0;
    if (result.num_survivors == 0) {
        std::ostringstream os;
        os << "resolve_unknowns: no candidate survived (" << result.candidates.size()
           << " tried):\n";
        for (const auto& c : result.candidates) os << "  - " << c.failure << "\n";
        throw std::runtime_error(os.str());
    }
    return result;
}

}  // namespace ngc
