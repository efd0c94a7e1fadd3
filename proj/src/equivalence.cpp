#include "iep/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace iep {

namespace {

int cmp_rat(const Rat& a, const Rat& b) { return cmp(a, b); }

int cmp_triple(const std::array<Quat, 3>& a, const std::array<Quat, 3>& b) {
    for (int i = 0; i < 3; ++i) {
        const auto ca = a[i].coords(), cb = b[i].coords();
        for (int j = 0; j < 4; ++j)
            if (int c = cmp_rat(ca[j], cb[j]); c != 0) return c;
    }
    return 0;
}

struct Dsu {
    std::vector<size_t> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t{0}); }
    size_t find(size_t i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// coordinates of phi -> phi*y - y2*phi as a 4x4 rational matrix acting on
// (u, v, w, t)
std::array<Vec4q, 4> intertwine_rows(const Quat& y, const Quat& y2) {
    const AlgebraParams& alg = y.alg;
    std::array<Quat, 4> units = {quat_scalar(alg, 1),
                                 quat_from_coords(alg, 0, 1, 0, 0),
                                 quat_from_coords(alg, 0, 0, 1, 0),
                                 quat_from_coords(alg, 0, 0, 0, 1)};
    std::array<Vec4q, 4> rows{};
    for (int col = 0; col < 4; ++col) {
        const Quat im = quat_sub(quat_mul(units[col], y), quat_mul(y2, units[col]));
        const auto c = im.coords();
        for (int row = 0; row < 4; ++row) rows[row][col] = c[row];
    }
    return rows;
}

Quat quat_from_vec(const AlgebraParams& alg, const Vec4q& v) {
    return quat_from_coords(alg, v[0], v[1], v[2], v[3]);
}

bool normalizes_order(const MaximalOrder& R, const Quat& phi) {
    const Rat n = quat_norm(phi);
    if (n == 0) return false;
    const Quat inv = quat_scale(1 / n, quat_conj(phi));
    for (const Quat& b : R.basis)
        if (!membership(R, quat_mul(quat_mul(phi, b), inv))) return false;
    return true;
}

Vec4q primitive(const Vec4q& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
        lcm_den = l;
    }
    std::array<Int, 4> scaled;
    Int g = 0;
    for (int i = 0; i < 4; ++i) {
        const Rat s = v[i] * Rat(lcm_den);
        scaled[i] = s.get_num();
        g = gcd(g, scaled[i]);
    }
    Vec4q out{};
    for (int i = 0; i < 4; ++i) out[i] = (g == 0) ? Rat(0) : Rat(scaled[i] / g);
    return out;
}

}  // namespace

bool solution_less(const NormalSolution& a, const NormalSolution& b) {
    if (a.s != b.s) return a.s < b.s;
    if (!(a.profile == b.profile)) return a.profile < b.profile;
    return cmp_triple(a.triple, b.triple) < 0;
}

Septuple conjugate_septuple(const Septuple& s, const std::array<Rat, 3>& aut, const Int& A,
                            const Int& B, const Int& C) {
    const Rat a0 = aut[0], a1 = aut[1], a2 = aut[2];
    const Rat x(s.x), a(s.a), b(s.b), cn(s.cn), dn(s.dn);
    const Rat xp = a0 + a1 * x + a2 * x * x + a2 * a;
    const Rat lin = a1 + a2 * x;
    const Rat ap = a * (a2 * a2 * cn + lin * lin) + b * (a2 * a2 * dn + 2 * a2 * lin);
    if (!is_integer(xp) || !is_integer(ap))
        throw config_error("conjugate_septuple: non-integral image, invalid automorphism data");
    Septuple r;
    r.x = xp.get_num();
    r.a = ap.get_num();
    r.dn = A - r.x;
    r.cn = r.dn * r.x - r.a - B;
    r.b = r.cn * r.x + r.dn * r.a + C;
    r.gamma = r.cn * r.a + r.dn * r.b;
    r.n = r.a * r.gamma - r.b * r.b;
    return r;
}

bool triples_conjugate(const std::array<Quat, 3>& t, const std::array<Quat, 3>& t2,
                       const MaximalOrder& R) {
    if (cmp_triple(t, t2) == 0) return true;

    std::vector<Vec4q> rows;
    for (int i = 0; i < 3; ++i) {
        const auto r = intertwine_rows(t[i], t2[i]);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    const auto space = rational_nullspace4(rows);
    if (space.empty()) return false;

    std::vector<Vec4q> candidates;
    for (const auto& v : space) candidates.push_back(primitive(v));
    const size_t nb = candidates.size();
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j) {
            Vec4q sum{}, diff{};
            for (int k = 0; k < 4; ++k) {
                sum[k] = candidates[i][k] + candidates[j][k];
                diff[k] = candidates[i][k] - candidates[j][k];
            }
            candidates.push_back(primitive(sum));
            candidates.push_back(primitive(diff));
        }

    for (const auto& v : candidates) {
        const Quat phi = quat_from_vec(R.params, v);
        if (phi.is_zero()) continue;
        if (normalizes_order(R, phi)) return true;
    }
    return false;
}

std::vector<SolutionClass> dedupe(const std::vector<NormalSolution>& solutions,
                                  const FieldSpec& spec, const MaximalOrder& R,
                                  bool strict_equivalence) {
    std::vector<size_t> order(solutions.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return solution_less(solutions[a], solutions[b]); });

    Dsu dsu(solutions.size());

    // inner-automorphism equivalence within one septuple; equal profiles are a
    // necessary condition, used as a pre-filter
    std::map<Septuple, std::vector<size_t>> by_septuple;
    for (size_t idx : order) by_septuple[solutions[idx].s].push_back(idx);
    for (auto& [s, idxs] : by_septuple) {
        for (size_t i = 0; i < idxs.size(); ++i)
            for (size_t j = i + 1; j < idxs.size(); ++j) {
                const auto &si = solutions[idxs[i]], &sj = solutions[idxs[j]];
                if (dsu.find(idxs[i]) == dsu.find(idxs[j])) continue;
                if (!(si.profile == sj.profile)) continue;
                if (triples_conjugate(si.triple, sj.triple, R)) dsu.unite(idxs[i], idxs[j]);
            }
    }

    // conjugate-root orbits across septuples; the triple-transport formulas
    // are not available, so matching class structures are merged and the
    // merge is flagged as presumed
    std::map<Septuple, size_t> sept_id;
    std::vector<Septuple> septs;
    for (auto& [s, idxs] : by_septuple) {
        sept_id.emplace(s, septs.size());
        septs.push_back(s);
    }
    Dsu sept_dsu(septs.size());
    if (!strict_equivalence && !spec.automorphisms.empty()) {
        for (size_t si = 0; si < septs.size(); ++si) {
            std::set<Septuple> orbit{septs[si]};
            bool grew = true;
            int guard = 0;
            while (grew && guard++ < 64) {
                grew = false;
                for (const auto& aut : spec.automorphisms)
                    for (const auto& m : std::vector<Septuple>(orbit.begin(), orbit.end())) {
                        const Septuple img = conjugate_septuple(m, aut, spec.A, spec.B, spec.C);
                        if (orbit.insert(img).second) grew = true;
                    }
            }
            for (const auto& m : orbit) {
                auto it = sept_id.find(m);
                if (it != sept_id.end()) sept_dsu.unite(si, it->second);
            }
        }
    }

    // per-septuple class lists in canonical order
    auto classes_of = [&](const Septuple& s) {
        std::map<size_t, std::vector<size_t>> by_root;
        for (size_t idx : by_septuple[s]) by_root[dsu.find(idx)].push_back(idx);
        std::vector<std::vector<size_t>> cl;
        for (auto& [root, members] : by_root) {
            std::sort(members.begin(), members.end(), [&](size_t a, size_t b) {
                return solution_less(solutions[a], solutions[b]);
            });
            cl.push_back(members);
        }
        std::sort(cl.begin(), cl.end(), [&](const auto& a, const auto& b) {
            return solution_less(solutions[a.front()], solutions[b.front()]);
        });
        return cl;
    };

    if (!strict_equivalence) {
        std::map<size_t, std::vector<size_t>> orbits;
        for (size_t si = 0; si < septs.size(); ++si) orbits[sept_dsu.find(si)].push_back(si);
        for (auto& [root, members] : orbits) {
            if (members.size() < 2) continue;
            std::vector<std::vector<std::vector<size_t>>> lists;
            for (size_t si : members) lists.push_back(classes_of(septs[si]));
            const size_t ncl = lists.front().size();
            bool match = true;
            for (const auto& l : lists) {
                if (l.size() != ncl) { match = false; break; }
                for (size_t k = 0; k < ncl; ++k)
                    if (l[k].size() != lists.front()[k].size()) { match = false; break; }
            }
            if (!match || ncl == 0) continue;
            for (size_t k = 0; k < ncl; ++k)
                for (size_t li = 1; li < lists.size(); ++li)
                    dsu.unite(lists[0][k].front(), lists[li][k].front());
        }
    }

    std::map<size_t, SolutionClass> out_map;
    std::map<size_t, std::set<Septuple>> class_septs;
    for (size_t idx : order) {
        const size_t root = dsu.find(idx);
        auto it = out_map.find(root);
        if (it == out_map.end()) {
            SolutionClass c;
            c.representative = solutions[idx];
            c.size = 1;
            out_map.emplace(root, std::move(c));
        } else {
            if (solution_less(solutions[idx], it->second.representative))
                it->second.representative = solutions[idx];
            it->second.size += 1;
        }
        class_septs[root].insert(solutions[idx].s);
    }
    std::vector<SolutionClass> out;
    for (auto& [root, c] : out_map) {
        c.member_septuples.assign(class_septs[root].begin(), class_septs[root].end());
        c.presumed_merge = c.member_septuples.size() > 1;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const SolutionClass& a, const SolutionClass& b) {
        return solution_less(a.representative, b.representative);
    });
    return out;
}

}  // namespace iep
