#include "deltarig/deltamatroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace deltarig {

namespace {

std::string mask_to_string(Mask m, const std::vector<std::string>& ground) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < static_cast<int>(ground.size()); ++i) {
        if ((m >> i) & 1u) {
            if (!first) s += ",";
            s += ground[static_cast<std::size_t>(i)];
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

DeltaMatroid::DeltaMatroid(std::vector<std::string> ground, std::vector<Mask> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
    std::sort(feasible_.begin(), feasible_.end());
    feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

DeltaMatroid DeltaMatroid::unchecked(std::vector<std::string> ground, std::vector<Mask> feasible) {
    return DeltaMatroid(std::move(ground), std::move(feasible));
}

DeltaMatroid DeltaMatroid::validate(std::vector<std::string> ground, std::vector<Mask> feasible) {
    if (ground.size() > 30) throw std::invalid_argument("ground set larger than 30 elements");
    {
        std::unordered_set<std::string> seen(ground.begin(), ground.end());
        if (seen.size() != ground.size()) throw std::invalid_argument("ground labels are not distinct");
    }
    if (feasible.empty()) throw std::invalid_argument("no feasible sets");
    DeltaMatroid d(std::move(ground), std::move(feasible));
    const Mask full = d.full_mask();
    std::unordered_set<Mask> family(d.feasible_.begin(), d.feasible_.end());
    for (Mask f : d.feasible_)
        if ((f & ~full) != 0) throw std::invalid_argument("feasible set uses unknown element");

    for (Mask f1 : d.feasible_) {
        for (Mask f2 : d.feasible_) {
            Mask diff = f1 ^ f2;
            for (Mask rem = diff; rem != 0; rem &= rem - 1) {
                const Mask ebit = rem & (Mask(0) - rem);
                bool ok = false;
                for (Mask rem2 = diff; rem2 != 0; rem2 &= rem2 - 1) {
                    const Mask fbit = rem2 & (Mask(0) - rem2);
                    // f may equal e, in which case {e,f} = {e}
                    const Mask swap = (fbit == ebit) ? ebit : (ebit | fbit);
                    if (family.count(f1 ^ swap)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) {
                    const int e = std::countr_zero(ebit);
                    std::ostringstream msg;
                    msg << "symmetric exchange fails at (" << mask_to_string(f1, d.ground_) << ","
                        << mask_to_string(f2, d.ground_) << "," << d.ground_[static_cast<std::size_t>(e)]
                        << ")";
                    throw std::invalid_argument(msg.str());
                }
            }
        }
    }
    return d;
}

int DeltaMatroid::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown element: " + label);
}

Mask DeltaMatroid::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= Mask(1) << index_of(l);
    return m;
}

bool DeltaMatroid::is_feasible(Mask f) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), f);
}

int DeltaMatroid::min_feasible_size() const {
    int m = size();
    for (Mask f : feasible_) m = std::min(m, std::popcount(f));
    return m;
}

int DeltaMatroid::max_feasible_size() const {
    int m = 0;
    for (Mask f : feasible_) m = std::max(m, std::popcount(f));
    return m;
}

bool DeltaMatroid::is_even() const {
    const int parity = std::popcount(feasible_.front()) & 1;
    for (Mask f : feasible_)
        if ((std::popcount(f) & 1) != parity) return false;
    return true;
}

void DeltaMatroid::check_element(int e) const {
    if (e < 0 || e >= size()) throw std::invalid_argument("unknown element");
}

bool DeltaMatroid::is_loop(int e) const {
    check_element(e);
    const Mask bit = Mask(1) << e;
    for (Mask f : feasible_)
        if (f & bit) return false;
    return true;
}

bool DeltaMatroid::is_coloop(int e) const {
    check_element(e);
    const Mask bit = Mask(1) << e;
    for (Mask f : feasible_)
        if (!(f & bit)) return false;
    return true;
}

int DeltaMatroid::min_matroid_rank(Mask a) const {
    if ((a & ~full_mask()) != 0) throw std::invalid_argument("unknown element");
    const int msize = min_feasible_size();
    int r = 0;
    for (Mask f : feasible_)
        if (std::popcount(f) == msize) r = std::max(r, std::popcount(f & a));
    return r;
}

int DeltaMatroid::max_matroid_rank(Mask a) const {
    if ((a & ~full_mask()) != 0) throw std::invalid_argument("unknown element");
    const int msize = max_feasible_size();
    int r = 0;
    for (Mask f : feasible_)
        if (std::popcount(f) == msize) r = std::max(r, std::popcount(f & a));
    return r;
}

int DeltaMatroid::rho(Mask a) const {
    if ((a & ~full_mask()) != 0) throw std::invalid_argument("unknown element");
    int dist = size() + 1;
    for (Mask f : feasible_) dist = std::min(dist, std::popcount(a ^ f));
    return size() - dist;
}

DeltaMatroid DeltaMatroid::remove_position(int e, bool keep_containing) const {
    const Mask bit = Mask(1) << e;
    const Mask low = bit - 1;
    std::vector<Mask> out;
    out.reserve(feasible_.size());
    for (Mask f : feasible_) {
        if (static_cast<bool>(f & bit) != keep_containing) continue;
        out.push_back((f & low) | ((f >> 1) & ~low));
    }
    std::vector<std::string> g = ground_;
    g.erase(g.begin() + e);
    return DeltaMatroid(std::move(g), std::move(out));
}

DeltaMatroid DeltaMatroid::delete_element(int e) const {
    check_element(e);
    if (is_coloop(e)) return remove_position(e, true);  // identified with contraction
    return remove_position(e, false);
}

DeltaMatroid DeltaMatroid::contract_element(int e) const {
    check_element(e);
    if (is_loop(e)) return remove_position(e, false);  // identified with deletion
    return remove_position(e, true);
}

DeltaMatroid DeltaMatroid::restrict_to(Mask a) const {
    if ((a & ~full_mask()) != 0) throw std::invalid_argument("unknown element");
    return minor(full_mask() & ~a, 0);
}

DeltaMatroid DeltaMatroid::minor(Mask del, Mask con) const {
    const Mask full = full_mask();
    if ((del & ~full) != 0 || (con & ~full) != 0) throw std::invalid_argument("unknown element");
    if ((del & con) != 0) throw std::invalid_argument("delete and contract sets overlap");
    DeltaMatroid d = *this;
    // highest position first so lower bit positions stay valid
    for (int e = size() - 1; e >= 0; --e) {
        const Mask bit = Mask(1) << e;
        if (del & bit)
            d = d.delete_element(e);
        else if (con & bit)
            d = d.contract_element(e);
    }
    return d;
}

DeltaMatroid DeltaMatroid::twist(Mask a) const {
    if ((a & ~full_mask()) != 0) throw std::invalid_argument("unknown element");
    std::vector<Mask> out;
    out.reserve(feasible_.size());
    for (Mask f : feasible_) out.push_back(f ^ a);
    return DeltaMatroid(ground_, std::move(out));
}

DeltaMatroid DeltaMatroid::direct_sum(const DeltaMatroid& a, const DeltaMatroid& b) {
    for (const auto& l : b.ground_)
        for (const auto& k : a.ground_)
            if (l == k) throw std::invalid_argument("ground sets not disjoint");
    if (a.size() + b.size() > 30) throw std::invalid_argument("ground set larger than 30 elements");
    std::vector<std::string> g = a.ground_;
    g.insert(g.end(), b.ground_.begin(), b.ground_.end());
    std::vector<Mask> out;
    out.reserve(a.feasible_.size() * b.feasible_.size());
    for (Mask f1 : a.feasible_)
        for (Mask f2 : b.feasible_) out.push_back(f1 | (f2 << a.size()));
    return DeltaMatroid(std::move(g), std::move(out));
}

bool DeltaMatroid::is_connected(Mask* witness) const {
    const int n = size();
    if (n <= 1) return true;
    const Mask full = full_mask();
    for (Mask m = 1; m < full; m += 2) {  // element 0 always on the E1 side
        std::set<Mask> proj1, proj2;
        for (Mask f : feasible_) {
            proj1.insert(f & m);
            proj2.insert(f & ~m & full);
        }
        if (proj1.size() * proj2.size() == feasible_.size()) {
            if (witness) *witness = m;
            return false;
        }
    }
    return true;
}

ElementInfo DeltaMatroid::classify_element(int e) const {
    check_element(e);
    const Mask bit = Mask(1) << e;
    ElementInfo info{};
    info.is_loop = is_loop(e);
    info.is_coloop = is_coloop(e);

    const int msize = min_feasible_size();
    bool loop_in_min = true;
    for (Mask f : feasible_)
        if (std::popcount(f) == msize && (f & bit)) {
            loop_in_min = false;
            break;
        }
    if (!loop_in_min) {
        info.cls = ElementClass::Ordinary;
        return info;
    }
    // e is a loop of (D*e)_min iff no minimum-size twisted set F ^ {e} contains e,
    // i.e. every feasible F achieving the twisted minimum has e in F.
    int tmin = size() + 1;
    for (Mask f : feasible_) tmin = std::min(tmin, std::popcount(f ^ bit));
    bool loop_in_twist_min = true;
    for (Mask f : feasible_)
        if (std::popcount(f ^ bit) == tmin && ((f ^ bit) & bit)) {
            loop_in_twist_min = false;
            break;
        }
    info.cls = loop_in_twist_min ? ElementClass::NonOrientableRibbonLoop
                                 : ElementClass::OrientableRibbonLoop;
    return info;
}

int DeltaMatroid::sigma2(Mask a) const {
    DeltaMatroid r = restrict_to(a);
    return r.min_feasible_size() + r.max_feasible_size();
}

namespace {

/// size-indexed count of feasible sets containing each element, used to prune
/// the isomorphism permutation search
std::vector<std::vector<int>> element_profiles(const DeltaMatroid& d) {
    const int n = d.size();
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (Mask f : d.feasible()) {
        const int s = std::popcount(f);
        for (int e = 0; e < n; ++e)
            if ((f >> e) & 1u) ++prof[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)];
    }
    return prof;
}

bool iso_search(const DeltaMatroid& a, const DeltaMatroid& b,
                const std::vector<std::vector<int>>& pa, const std::vector<std::vector<int>>& pb,
                std::vector<int>& perm, std::vector<bool>& used, int pos) {
    const int n = a.size();
    if (pos == n) {
        std::vector<Mask> mapped;
        mapped.reserve(a.feasible().size());
        for (Mask f : a.feasible()) {
            Mask g = 0;
            for (int e = 0; e < n; ++e)
                if ((f >> e) & 1u) g |= Mask(1) << perm[static_cast<std::size_t>(e)];
            mapped.push_back(g);
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == b.feasible();
    }
    for (int t = 0; t < n; ++t) {
        if (used[static_cast<std::size_t>(t)]) continue;
        if (pa[static_cast<std::size_t>(pos)] != pb[static_cast<std::size_t>(t)]) continue;
        used[static_cast<std::size_t>(t)] = true;
        perm[static_cast<std::size_t>(pos)] = t;
        if (iso_search(a, b, pa, pb, perm, used, pos + 1)) return true;
        used[static_cast<std::size_t>(t)] = false;
    }
    return false;
}

}  // namespace

bool DeltaMatroid::is_isomorphic(const DeltaMatroid& other) const {
    if (size() != other.size()) return false;
    if (feasible_.size() != other.feasible_.size()) return false;
    auto sizes = [](const DeltaMatroid& d) {
        std::vector<int> s;
        s.reserve(d.feasible().size());
        for (Mask f : d.feasible()) s.push_back(std::popcount(f));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(*this) != sizes(other)) return false;
    auto pa = element_profiles(*this);
    auto pb = element_profiles(other);
    {
        auto sa = pa;
        auto sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> perm(static_cast<std::size_t>(size()));
    std::vector<bool> used(static_cast<std::size_t>(size()), false);
    return iso_search(*this, other, pa, pb, perm, used, 0);
}

bool DeltaMatroid::has_minor_in(const std::vector<DeltaMatroid>& targets, bool up_to_twist,
                                std::pair<Mask, Mask>* witness) const {
    std::vector<DeltaMatroid> expanded;
    for (const auto& t : targets) {
        if (!up_to_twist) {
            expanded.push_back(t);
            continue;
        }
        std::set<std::vector<Mask>> seen;
        for (Mask a = 0; a <= t.full_mask(); ++a) {
            DeltaMatroid tw = t.twist(a);
            if (seen.insert(tw.feasible()).second) expanded.push_back(std::move(tw));
        }
    }

    const Mask full = full_mask();
    const int n = size();
    for (Mask keep = 0; keep <= full; ++keep) {
        const int k = std::popcount(keep);
        bool size_match = false;
        for (const auto& t : expanded)
            if (t.size() == k) {
                size_match = true;
                break;
            }
        if (!size_match) continue;
        const Mask gone = full & ~keep;
        // distribute removed elements between deletion and contraction
        for (Mask del = gone;; del = (del - 1) & gone) {
            const Mask con = gone & ~del;
            DeltaMatroid m = minor(del, con);
            for (const auto& t : expanded) {
                if (m.is_isomorphic(t)) {
                    if (witness) *witness = {del, con};
                    return true;
                }
            }
            if (del == 0) break;
        }
    }
    (void)n;
    return false;
}

std::vector<Mask> DeltaMatroid::canonical_key() const {
    std::vector<Mask> key;
    key.reserve(feasible_.size() + 1);
    key.push_back(static_cast<Mask>(size()));
    key.insert(key.end(), feasible_.begin(), feasible_.end());
    return key;
}

std::string DeltaMatroid::describe() const {
    std::ostringstream out;
    out << "E={";
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (i) out << ",";
        out << ground_[i];
    }
    out << "} F={";
    for (std::size_t i = 0; i < feasible_.size(); ++i) {
        if (i) out << ",";
        out << mask_to_string(feasible_[i], ground_);
    }
    out << "}";
    return out.str();
}

DeltaMatroid make_np() {
    return DeltaMatroid::unchecked({"1", "2", "3"}, {0b000, 0b011, 0b101, 0b110});
}

DeltaMatroid make_uniform(int r, int n) {
    if (r < 0 || n < 0 || r > n || n > 30) throw std::invalid_argument("bad uniform matroid parameters");
    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    std::vector<Mask> feas;
    for (Mask f = 0; f < (Mask(1) << n); ++f)
        if (std::popcount(f) == r) feas.push_back(f);
    return DeltaMatroid::unchecked(std::move(ground), std::move(feas));
}

DeltaMatroid make_mk4() {
    // K_4 on vertices 0..3; edges in fixed order; bases = spanning trees
    const std::pair<int, int> edges[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::string> ground = {"12", "13", "14", "23", "24", "34"};
    std::vector<Mask> bases;
    for (Mask f = 0; f < 64; ++f) {
        if (std::popcount(f) != 3) continue;
        int parent[4] = {0, 1, 2, 3};
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int i = 0; i < 6 && acyclic; ++i) {
            if (!((f >> i) & 1u)) continue;
            int a = find(edges[i].first), b = find(edges[i].second);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (acyclic) bases.push_back(f);
    }
    return DeltaMatroid::unchecked(std::move(ground), std::move(bases));
}

}  // namespace deltarig
