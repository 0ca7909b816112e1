#include "conicring/brauer.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>

#include "conicring/error.hpp"

namespace conicring {

namespace {

/// Coordinates for a finite list of places; rows are bit vectors over it.
/// Column order follows the place order, so the lowest set bit is the pivot.
class PlaceFrame {
public:
    explicit PlaceFrame(const std::vector<BrauerClass>& classes) {
        for (const auto& c : classes)
            places_.insert(places_.end(), c.ramified().begin(), c.ramified().end());
        std::sort(places_.begin(), places_.end());
        places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
        words_ = (places_.size() + 63) / 64;
    }

    using Row = std::vector<std::uint64_t>;

    std::size_t columns() const { return places_.size(); }

    Row encode(const BrauerClass& c) const {
        Row row(words_, 0);
        for (Place v : c.ramified()) {
            auto col = static_cast<std::size_t>(
                std::lower_bound(places_.begin(), places_.end(), v) - places_.begin());
            row[col / 64] |= std::uint64_t{1} << (col % 64);
        }
        return row;
    }

    BrauerClass decode(const Row& row) const {
        std::vector<Place> set;
        for (std::size_t col = 0; col < places_.size(); ++col)
            if (test(row, col)) set.push_back(places_[col]);
        return BrauerClass(std::move(set));
    }

    static bool test(const Row& row, std::size_t col) { return (row[col / 64] >> (col % 64)) & 1u; }

    static void add_into(Row& dst, const Row& src) {
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
    }

private:
    std::vector<Place> places_;
    std::size_t words_ = 0;
};

}  // namespace

BrauerClass::BrauerClass(std::vector<Place> ramified) : ramified_(std::move(ramified)) {
    std::sort(ramified_.begin(), ramified_.end());
    ramified_.erase(std::unique(ramified_.begin(), ramified_.end()), ramified_.end());
    if (ramified_.size() % 2 != 0)
        throw InputError("ramification set " + to_string() + " has odd cardinality");
}

std::optional<BrauerClass> BrauerClass::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::vector<Place> places;
    while (!body.empty()) {
        auto comma = body.find(',');
        auto item = trim(body.substr(0, comma));
        auto place = Place::parse(item);
        if (!place) return std::nullopt;
        places.push_back(*place);
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
        if (trim(body).empty()) return std::nullopt;
    }
    std::sort(places.begin(), places.end());
    if (std::adjacent_find(places.begin(), places.end()) != places.end()) return std::nullopt;
    if (places.size() % 2 != 0) return std::nullopt;
    return BrauerClass(std::move(places));
}

bool BrauerClass::contains(Place v) const {
    return std::binary_search(ramified_.begin(), ramified_.end(), v);
}

std::string BrauerClass::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < ramified_.size(); ++i) {
        if (i) s += ',';
        s += ramified_[i].to_string();
    }
    return s + "}";
}

BrauerClass class_add(const BrauerClass& x, const BrauerClass& y) {
    std::vector<Place> out;
    std::set_symmetric_difference(x.ramified().begin(), x.ramified().end(), y.ramified().begin(),
                                  y.ramified().end(), std::back_inserter(out));
    return BrauerClass(std::move(out));
}

std::string Subgroup::to_string() const {
    if (basis_.empty()) return "0";
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ',';
        s += basis_[i].to_string();
    }
    return s + ">";
}

Subgroup span(const std::vector<BrauerClass>& classes) {
    PlaceFrame frame(classes);
    std::vector<PlaceFrame::Row> rows;
    rows.reserve(classes.size());
    for (const auto& c : classes) rows.push_back(frame.encode(c));

    // Gauss-Jordan elimination, columns in place order.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < frame.columns() && rank < rows.size(); ++col) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [&](const auto& r) { return PlaceFrame::test(r, col); });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != rank && PlaceFrame::test(rows[k], col)) PlaceFrame::add_into(rows[k], rows[rank]);
        ++rank;
    }

    std::vector<BrauerClass> basis;
    basis.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) basis.push_back(frame.decode(rows[i]));
    return Subgroup(std::move(basis));
}

Subgroup join(const Subgroup& g1, const Subgroup& g2) {
    std::vector<BrauerClass> all = g1.basis();
    all.insert(all.end(), g2.basis().begin(), g2.basis().end());
    return span(all);
}

bool contains(const Subgroup& g, const BrauerClass& x) {
    // The pivot of each basis class is its smallest place and appears in no
    // other basis class, so x reduces by clearing pivots in order.
    BrauerClass rem = x;
    for (const auto& b : g.basis()) {
        if (rem.contains(b.ramified().front())) rem = class_add(rem, b);
    }
    return rem.is_split();
}

bool subgroup_leq(const Subgroup& g1, const Subgroup& g2) {
    return std::all_of(g1.basis().begin(), g1.basis().end(),
                       [&](const BrauerClass& b) { return contains(g2, b); });
}

GeneratorReduction reduce_generators(const std::vector<BrauerClass>& e) {
    PlaceFrame frame(e);
    std::vector<PlaceFrame::Row> rows;
    rows.reserve(e.size());
    for (const auto& c : e) rows.push_back(frame.encode(c));

    std::vector<TransvectionOp> ops;
    auto apply = [&](std::size_t source, std::size_t target) {
        ops.push_back({source, target});
        PlaceFrame::add_into(rows[target], rows[source]);
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < frame.columns() && rank < rows.size(); ++col) {
        std::size_t found = rank;
        while (found < rows.size() && !PlaceFrame::test(rows[found], col)) ++found;
        if (found == rows.size()) continue;
        if (found != rank) {
            // (x, y) -> (x, x+y) -> (y, x+y) -> (y, x)
            apply(rank, found);
            apply(found, rank);
            apply(rank, found);
        }
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != rank && PlaceFrame::test(rows[k], col)) apply(rank, k);
        ++rank;
    }

    return {std::move(ops), span(e)};
}

std::vector<BrauerClass> replay(std::vector<BrauerClass> e, const std::vector<TransvectionOp>& ops) {
    for (const auto& op : ops) {
        if (op.source >= e.size() || op.target >= e.size()) {
            throw IndexOutOfRange("transvection " + std::to_string(op.target) + " += " +
                                  std::to_string(op.source) + " out of range for " +
                                  std::to_string(e.size()) + " classes");
        }
        if (op.source == op.target) throw InputError("transvection source equals target");
        e[op.target] = class_add(e[op.source], e[op.target]);
    }
    return e;
}

}  // namespace conicring
