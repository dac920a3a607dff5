#include "ecs/partition_maya.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rext {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (p > 0) parts_.push_back(p);
    }
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
}

int Partition::weight() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= part(1); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

IndexSet IndexSet::translated(int n) const {
    std::set<int> s;
    for (int k : elements_) s.insert(k + n);
    return IndexSet(std::move(s));
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int k : elements_) {
        os << (first ? "" : ",") << k;
        first = false;
    }
    os << "}";
    return os.str();
}

IndexSet symmetric_difference(const IndexSet& a, const IndexSet& b) {
    std::set<int> s;
    std::set_symmetric_difference(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                  b.elements().end(), std::inserter(s, s.end()));
    return IndexSet(std::move(s));
}

IndexSet intersection(const IndexSet& a, const IndexSet& b) {
    std::set<int> s;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::inserter(s, s.end()));
    return IndexSet(std::move(s));
}

MayaDiagram::MayaDiagram(std::set<int> filled_nonneg, std::set<int> empty_neg)
    : filled_nonneg_(std::move(filled_nonneg)), empty_neg_(std::move(empty_neg)) {
    if (!filled_nonneg_.empty() && *filled_nonneg_.begin() < 0)
        throw std::invalid_argument("filled_nonneg must hold integers >= 0");
    if (!empty_neg_.empty() && *empty_neg_.rbegin() >= 0)
        throw std::invalid_argument("empty_neg must hold integers < 0");
}

MayaDiagram MayaDiagram::from_index_set(const IndexSet& k) { return multi_flip(MayaDiagram(), k); }

bool MayaDiagram::contains(int m) const {
    return m >= 0 ? filled_nonneg_.count(m) != 0 : empty_neg_.count(m) == 0;
}

int MayaDiagram::index() const {
    return static_cast<int>(filled_nonneg_.size()) - static_cast<int>(empty_neg_.size());
}

IndexSet MayaDiagram::index_set() const {
    std::set<int> s(filled_nonneg_);
    s.insert(empty_neg_.begin(), empty_neg_.end());
    return IndexSet(std::move(s));
}

int MayaDiagram::smallest_nonmember() const {
    if (!empty_neg_.empty()) return *empty_neg_.begin();
    int m = 0;
    while (filled_nonneg_.count(m)) ++m;
    return m;
}

int MayaDiagram::largest_member() const {
    if (!filled_nonneg_.empty()) return *filled_nonneg_.rbegin();
    int m = -1;
    while (empty_neg_.count(m)) --m;
    return m;
}

std::vector<int> MayaDiagram::members_from(int lo) const {
    std::vector<int> out;
    for (int m = largest_member(); m >= lo; --m)
        if (contains(m)) out.push_back(m);
    return out;
}

std::string MayaDiagram::to_string() const {
    std::ostringstream os;
    os << "{...";
    const int lo = std::min(smallest_nonmember() - 2, -2);
    for (int m = lo; m <= largest_member(); ++m)
        if (contains(m)) os << "," << m;
    os << "}";
    return os.str();
}

namespace {

// Diagram whose membership is `pred` on [lo, hi], full below lo, empty above hi.
MayaDiagram from_window(int lo, int hi, const std::function<bool(int)>& pred) {
    std::set<int> filled, empty;
    for (int m = std::min(lo, 0); m <= std::max(hi, -1); ++m) {
        bool in = m < lo ? true : (m > hi ? false : pred(m));
        if (m >= 0 && in) filled.insert(m);
        if (m < 0 && !in) empty.insert(m);
    }
    return MayaDiagram(std::move(filled), std::move(empty));
}

}  // namespace

MayaDiagram maya_from_partition(const Partition& lambda) {
    const int l = lambda.length();
    std::set<int> members;
    for (int i = 1; i <= l; ++i) members.insert(lambda.part(i) - i);
    return from_window(-l, lambda.part(1) - 1, [&](int m) { return members.count(m) != 0; });
}

Partition partition_from_maya(const MayaDiagram& m) {
    const MayaDiagram base = translate(m, -m.index());
    std::vector<int> parts;
    const std::vector<int> members = base.members_from(base.smallest_nonmember());
    int i = 1;
    for (int mi : members) {
        parts.push_back(mi + i);
        ++i;
    }
    // Remaining members below the smallest non-member give λ_i = 0.
    return Partition(std::move(parts));
}

MayaDiagram translate(const MayaDiagram& m, int n) {
    return from_window(m.smallest_nonmember() + n, m.largest_member() + n,
                       [&](int k) { return m.contains(k - n); });
}

MayaDiagram flip(const MayaDiagram& m, int k) {
    std::set<int> filled = m.filled_nonneg(), empty = m.empty_neg();
    if (k >= 0) {
        if (!filled.erase(k)) filled.insert(k);
    } else {
        if (!empty.erase(k)) empty.insert(k);
    }
    return MayaDiagram(std::move(filled), std::move(empty));
}

MayaDiagram multi_flip(const MayaDiagram& m, const IndexSet& k) {
    MayaDiagram r = m;
    for (int x : k.elements()) r = flip(r, x);
    return r;
}

IndexSet symmetric_difference(const MayaDiagram& a, const MayaDiagram& b) {
    return symmetric_difference(a.index_set(), b.index_set());
}

std::vector<std::vector<int>> hooklengths(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> h;
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<int> row;
        for (int j = 1; j <= lambda.part(i); ++j)
            row.push_back(lambda.part(i) - j + conj.part(j) - i + 1);
        h.push_back(std::move(row));
    }
    return h;
}

BigInt dim_tableaux(const Partition& lambda) {
    BigInt prod = 1;
    for (const auto& row : hooklengths(lambda))
        for (int h : row) prod *= h;
    return factorial(static_cast<unsigned>(lambda.weight())) / prod;
}

int threshold_critical_degree(const Partition& lambda) { return lambda.part(1) + lambda.length(); }

bool is_critical_degree(const MayaDiagram& m, int q) {
    for (int k = m.smallest_nonmember(); k <= m.largest_member(); ++k)
        if (m.contains(k) && !m.contains(k - q)) return false;
    return true;
}

std::vector<int> critical_degrees(const Partition& lambda, int q_max) {
    if (q_max < 1) throw std::invalid_argument("q_max must be at least 1");
    const MayaDiagram m = maya_from_partition(lambda);
    std::vector<int> out;
    for (int q = 1; q <= q_max; ++q)
        if (is_critical_degree(m, q)) out.push_back(q);
    return out;
}

Insertion insertion(int m, const Partition& lambda) {
    const MayaDiagram mm = maya_from_partition(lambda);
    if (mm.contains(m)) throw std::domain_error("insertion: m belongs to M_lambda");
    int j = 0;
    while (m + j < lambda.part(j + 1)) ++j;
    std::vector<int> parts;
    for (int i = 1; i <= j; ++i) parts.push_back(lambda.part(i) - 1);
    parts.push_back(m + j);
    for (int i = j + 1; i <= lambda.length(); ++i) parts.push_back(lambda.part(i));
    const int above = static_cast<int>(mm.members_from(m + 1).size());
    return {above % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

std::vector<int> bound_state_indices(const MayaDiagram& m, int count) {
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    std::vector<int> out;
    for (int k = m.smallest_nonmember(); static_cast<int>(out.size()) < count; ++k)
        if (!m.contains(k)) out.push_back(k);
    return out;
}

bool is_krein_adler_regular(const MayaDiagram& m) {
    int run = 0;
    for (int k = m.smallest_nonmember(); k <= m.largest_member() + 1; ++k) {
        if (m.contains(k)) {
            ++run;
        } else {
            if (run % 2 != 0) return false;
            run = 0;
        }
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace rext
