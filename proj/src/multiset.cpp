#include "corecount/multiset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace corecount {

FiniteMultiset::FiniteMultiset(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    for (auto c : counts_)
        if (c < 0) throw std::invalid_argument("multiplicities must be nonnegative");
}

std::int64_t FiniteMultiset::cardinality() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

FiniteMultiset pushforward(const FiniteMultiset& f, std::span<const std::int64_t> map,
                           std::int64_t target_size) {
    if (static_cast<std::int64_t>(map.size()) != f.index_size())
        throw std::invalid_argument("pushforward: map must be total on the index set");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(target_size), 0);
    for (std::int64_t i = 0; i < f.index_size(); ++i) {
        if (map[i] < 0 || map[i] >= target_size)
            throw std::invalid_argument("pushforward: map image out of range");
        counts[map[i]] += f.count(i);
    }
    return FiniteMultiset(std::move(counts));
}

Int fibre_cardinality(const FiniteMultiset& g, std::span<const std::int64_t> fibre_sizes) {
    if (static_cast<std::int64_t>(fibre_sizes.size()) != g.index_size())
        throw std::invalid_argument("fibre_cardinality: one fibre size per target index");
    Int product = 1;
    for (std::int64_t j = 0; j < g.index_size(); ++j)
        product *= multichoose(fibre_sizes[j], g.count(j));
    return product;
}

bool MarginPair::balanced() const {
    auto sum = [](const std::vector<std::int64_t>& v) {
        return std::accumulate(v.begin(), v.end(), std::int64_t{0});
    };
    return sum(rows) == sum(cols);
}

std::vector<std::int64_t> Matching::row_sums() const {
    std::vector<std::int64_t> sums;
    for (const auto& row : entries)
        sums.push_back(std::accumulate(row.begin(), row.end(), std::int64_t{0}));
    return sums;
}

std::vector<std::int64_t> Matching::col_sums() const {
    if (entries.empty()) return {};
    std::vector<std::int64_t> sums(entries.front().size(), 0);
    for (const auto& row : entries)
        for (std::size_t j = 0; j < row.size(); ++j) sums[j] += row[j];
    return sums;
}

namespace {

void check_margins(const MarginPair& m) {
    for (auto v : m.rows)
        if (v < 0) throw std::invalid_argument("margins must be nonnegative");
    for (auto v : m.cols)
        if (v < 0) throw std::invalid_argument("margins must be nonnegative");
    if (!m.balanced()) throw std::invalid_argument("row and column margins must balance");
}

// Counts tables by distributing one margin of `dist` at a time over the
// remaining capacities `rem`, memoized on (level, rem). Recursing over the
// shorter side keeps the state space small; the count is transpose-invariant.
Int count_tables(const std::vector<std::int64_t>& dist, std::vector<std::int64_t> rem) {
    std::vector<std::map<std::vector<std::int64_t>, Int>> memo(dist.size() + 1);

    auto rec = [&](auto&& self, std::size_t level, std::vector<std::int64_t>& r) -> Int {
        if (level == dist.size()) return 1;  // balance forces r == 0 here
        auto it = memo[level].find(r);
        if (it != memo[level].end()) return it->second;
        Int total = 0;
        std::int64_t need = dist[level];
        auto fill = [&](auto&& fill_self, std::size_t cell, std::int64_t remaining) -> void {
            if (cell + 1 == r.size()) {
                if (remaining > r[cell]) return;
                r[cell] -= remaining;
                total += self(self, level + 1, r);
                r[cell] += remaining;
                return;
            }
            std::int64_t hi = std::min(remaining, r[cell]);
            for (std::int64_t v = 0; v <= hi; ++v) {
                r[cell] -= v;
                fill_self(fill_self, cell + 1, remaining - v);
                r[cell] += v;
            }
        };
        if (r.empty()) {
            if (need == 0) total = 1;
        } else {
            fill(fill, 0, need);
        }
        memo[level][r] = total;
        return total;
    };
    return rec(rec, 0, rem);
}

}  // namespace

Int count_matchings(const MarginPair& m) {
    check_margins(m);
    if (m.rows.empty() || m.cols.empty()) return 1;  // empty table, margins all zero
    if (m.rows.size() <= m.cols.size()) return count_tables(m.cols, m.rows);
    return count_tables(m.rows, m.cols);
}

std::vector<Matching> enumerate_matchings(const MarginPair& m, std::int64_t cap) {
    check_margins(m);
    const std::size_t s = m.rows.size(), t = m.cols.size();
    std::vector<Matching> out;
    std::vector<std::int64_t> colrem = m.cols;
    Matching work;
    work.entries.assign(s, std::vector<std::int64_t>(t, 0));

    auto fill_row = [&](auto&& self, std::size_t i, std::size_t j, std::int64_t remaining) -> void {
        if (j + 1 == t || t == 0) {
            if (t == 0) {
                if (remaining != 0) return;
            } else {
                if (remaining > colrem[j]) return;
                work.entries[i][j] = remaining;
                colrem[j] -= remaining;
            }
            if (i + 1 == s) {
                if (static_cast<std::int64_t>(out.size()) >= cap)
                    throw guard_error("enumerate_matchings: cap exceeded");
                out.push_back(work);
            } else {
                self(self, i + 1, 0, m.rows[i + 1]);
            }
            if (t != 0) {
                colrem[j] += remaining;
                work.entries[i][j] = 0;
            }
            return;
        }
        std::int64_t hi = std::min(remaining, colrem[j]);
        for (std::int64_t v = 0; v <= hi; ++v) {
            work.entries[i][j] = v;
            colrem[j] -= v;
            self(self, i, j + 1, remaining - v);
            colrem[j] += v;
            work.entries[i][j] = 0;
        }
    };

    if (s == 0) {
        out.push_back(Matching{});
        return out;
    }
    fill_row(fill_row, 0, 0, m.rows[0]);
    return out;
}

std::vector<FiniteMultiset> restrict_to_classes(const FiniteMultiset& f, std::int64_t d) {
    const std::int64_t s = f.index_size();
    if (d < 1 || s % d != 0) throw std::invalid_argument("restrict_to_classes: d must divide the index size");
    std::vector<FiniteMultiset> out;
    const std::int64_t width = s / d;
    for (std::int64_t j = 0; j < d; ++j) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(width));
        for (std::int64_t a = 0; a < width; ++a) counts[a] = f.count(j + a * d);
        out.emplace_back(std::move(counts));
    }
    return out;
}

}  // namespace corecount
