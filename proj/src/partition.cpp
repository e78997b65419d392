#include "corecount/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace corecount {

namespace {

std::string join_commas(const std::vector<std::int64_t>& v) {
    if (v.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<std::int64_t> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad partition literal: " + std::string(text));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::str() const { return join_commas(parts_); }

Pseudopartition::Pseudopartition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("pseudopartition parts must be nonnegative");
        if (i && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("pseudopartition parts must be weakly decreasing");
    }
}

std::string Pseudopartition::str() const { return join_commas(parts_); }

Pseudopartition with_trailing_zero(const Pseudopartition& p) {
    auto parts = p.parts();
    parts.push_back(0);
    return Pseudopartition(std::move(parts));
}

Pseudopartition padded_to(const Pseudopartition& p, std::int64_t k) {
    if (k < p.length()) throw std::invalid_argument("padded_to: k below length");
    auto parts = p.parts();
    parts.resize(static_cast<std::size_t>(k), 0);
    return Pseudopartition(std::move(parts));
}

Partition strip_trailing_zeros(const Pseudopartition& p) {
    auto parts = p.parts();
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

BetaSet BetaSet::of(std::vector<std::int64_t> elements) {
    std::sort(elements.begin(), elements.end(), std::greater<>());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 0) throw std::invalid_argument("beta set elements must be nonnegative");
        if (i && elements[i - 1] == elements[i])
            throw std::invalid_argument("beta set elements must be distinct");
    }
    BetaSet x;
    x.elems_ = std::move(elements);
    return x;
}

bool BetaSet::contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v, std::greater<>());
}

std::string BetaSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

ResidueMultiset::ResidueMultiset(std::int64_t modulus, std::vector<std::int64_t> counts)
    : modulus_(modulus), counts_(std::move(counts)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be positive");
    if (static_cast<std::int64_t>(counts_.size()) != modulus_)
        throw std::invalid_argument("count vector must have one entry per residue");
    for (auto c : counts_)
        if (c < 0) throw std::invalid_argument("multiplicities must be nonnegative");
}

ResidueMultiset ResidueMultiset::zeros(std::int64_t modulus) {
    return ResidueMultiset(modulus, std::vector<std::int64_t>(static_cast<std::size_t>(modulus), 0));
}

std::int64_t ResidueMultiset::cardinality() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

BetaSet beta(const Pseudopartition& p) {
    const auto& parts = p.parts();
    const std::int64_t l = p.length();
    std::vector<std::int64_t> elems(parts.size());
    for (std::int64_t i = 0; i < l; ++i) elems[i] = parts[i] + (l - 1 - i);
    return BetaSet::of(std::move(elems));
}

Pseudopartition beta_inv(const BetaSet& x) {
    const auto& h = x.elements();
    const std::int64_t l = x.cardinality();
    std::vector<std::int64_t> parts(h.size());
    for (std::int64_t i = 0; i < l; ++i) parts[i] = h[i] - (l - 1 - i);
    return Pseudopartition(std::move(parts));
}

BetaSet add_trailing_zero(const BetaSet& x) {
    std::vector<std::int64_t> elems;
    elems.reserve(x.elements().size() + 1);
    for (auto e : x.elements()) elems.push_back(e + 1);
    elems.push_back(0);
    return BetaSet::of(std::move(elems));
}

BetaSet pad_to(const BetaSet& x, std::int64_t k) {
    if (k < x.cardinality()) throw std::invalid_argument("pad_to: k below cardinality");
    BetaSet y = x;
    while (y.cardinality() < k) y = add_trailing_zero(y);
    return y;
}

BetaSet reduce(const BetaSet& x) {
    if (!x.contains(0)) return x;
    // Least whole number missing from x; elements are sorted descending.
    const auto& e = x.elements();
    std::int64_t m = 0;
    for (auto it = e.rbegin(); it != e.rend() && *it == m; ++it) ++m;
    std::vector<std::int64_t> elems;
    for (auto v : e)
        if (v >= m) elems.push_back(v - m);
    return BetaSet::of(std::move(elems));
}

ResidueMultiset residues(const BetaSet& x, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("modulus must be positive");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(t), 0);
    for (auto v : x.elements()) ++counts[v % t];
    return ResidueMultiset(t, std::move(counts));
}

BetaSet abacus_normal_form(const ResidueMultiset& f) {
    std::vector<std::int64_t> elems;
    const std::int64_t t = f.modulus();
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t a = 0; a < f.count(i); ++a) elems.push_back(a * t + i);
    return BetaSet::of(std::move(elems));
}

bool has_hook(const Partition& p, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("hook size must be positive");
    BetaSet x = beta(Pseudopartition(p));
    for (auto v : x.elements())
        if (v >= t && !x.contains(v - t)) return true;
    return false;
}

Partition core(const Partition& p, std::int64_t t) {
    BetaSet x = beta(Pseudopartition(p));
    BetaSet reduced = reduce(abacus_normal_form(residues(x, t)));
    return strip_trailing_zeros(beta_inv(reduced));
}

ResidueMultiset core_multiset(const Partition& p, std::int64_t t, std::int64_t k) {
    if (k < p.length()) throw std::invalid_argument("core_multiset: k below length");
    return residues(pad_to(beta(Pseudopartition(p)), k), t);
}

Partition multiset_to_core(const ResidueMultiset& f) {
    return strip_trailing_zeros(beta_inv(abacus_normal_form(f)));
}

void for_each_multiset(std::int64_t t, std::int64_t k,
                       const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (t < 1) throw std::invalid_argument("index size must be positive");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, std::int64_t pos, std::int64_t remaining) -> void {
        if (pos == t - 1) {
            counts[pos] = remaining;
            fn(counts);
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            counts[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, k);
}

std::vector<Partition> enumerate_cores(std::int64_t t, std::int64_t k) {
    std::vector<Partition> cores;
    for_each_multiset(t, k, [&](const std::vector<std::int64_t>& counts) {
        cores.push_back(multiset_to_core(ResidueMultiset(t, counts)));
    });
    return cores;
}

}  // namespace corecount
