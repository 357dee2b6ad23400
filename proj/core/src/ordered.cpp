#include "swr/ordered.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "swr/errors.hpp"

namespace swr {

const Rational& PeriodicStream::at(std::uint64_t n) const {
    if (n == 0)
        throw DomainError("stream positions start at 1");
    if (n <= prefix.size())
        return prefix[n - 1];
    return period[(n - prefix.size() - 1) % period.size()];
}

void validate_stream(const PeriodicStream& s) {
    if (s.period.empty())
        throw DomainError("stream period must be nonempty");
}

namespace {

struct SumShape {
    std::uint64_t prefix_len;          // common prefix length P
    std::uint64_t period_len;          // common super-period length L
    Rational drift;                    // S_{P+kL+r} = S_{P+r} + k * drift
    std::vector<Rational> residue_sums; // S_{P+1} .. S_{P+L}
};

SumShape difference_shape(const PeriodicStream& w, const PeriodicStream& v) {
    validate_stream(w);
    validate_stream(v);
    std::uint64_t p = std::max(w.prefix.size(), v.prefix.size());
    std::uint64_t l = std::lcm(w.period.size(), v.period.size());
    SumShape shape{p, l, 0, {}};
    Rational s = 0;
    for (std::uint64_t n = 1; n <= p; ++n)
        s += w.at(n) - v.at(n);
    for (std::uint64_t n = p + 1; n <= p + l; ++n) {
        Rational d = w.at(n) - v.at(n);
        s += d;
        shape.drift += d;
        shape.residue_sums.push_back(s);
    }
    return shape;
}

bool eventually(const SumShape& shape, int required_sign, bool allow_equal) {
    // required_sign > 0 with allow_equal: eventually >= 0;
    // required_sign > 0 strict: eventually > 0; required_sign == 0: eventually == 0.
    if (required_sign == 0)
        return shape.drift == 0 &&
               std::all_of(shape.residue_sums.begin(), shape.residue_sums.end(),
                           [](const Rational& r) { return r == 0; });
    if (shape.drift > 0)
        return true;
    if (shape.drift < 0)
        return false;
    for (const Rational& r : shape.residue_sums) {
        if (allow_equal ? r < 0 : r <= 0)
            return false;
    }
    return true;
}

} // namespace

Verdict cu_compare(const PeriodicStream& w, const PeriodicStream& v) {
    SumShape fwd = difference_shape(w, v);
    SumShape bwd = difference_shape(v, w);
    return verdict_from_weak(eventually(fwd, +1, /*allow_equal=*/true),
                             eventually(bwd, +1, /*allow_equal=*/true));
}

Verdict ot_compare(const PeriodicStream& w, const PeriodicStream& v) {
    SumShape fwd = difference_shape(w, v);
    if (eventually(fwd, 0, true))
        return Verdict::Equivalent;
    if (eventually(fwd, +1, /*allow_equal=*/false))
        return Verdict::StrictlyBetter;
    SumShape bwd = difference_shape(v, w);
    if (eventually(bwd, +1, /*allow_equal=*/false))
        return Verdict::StrictlyWorse;
    return Verdict::Incomparable;
}

World forget_order(const PeriodicStream& s) {
    validate_stream(s);
    std::map<Rational, Cardinal> counts;
    for (const Rational& r : s.period)
        counts[r] = Cardinal::omega();
    for (const Rational& r : s.prefix) {
        auto [it, inserted] = counts.emplace(r, Cardinal::finite(1));
        if (!inserted && it->second.is_finite())
            it->second = Cardinal::finite(it->second.value() + 1);
    }
    std::vector<Cell> cells;
    std::map<CellId, CellValue> assign;
    size_t i = 0;
    for (const auto& [value, count] : counts) {
        CellId id = "v" + std::to_string(i++);
        cells.push_back({id, count});
        assign.emplace(id, value);
    }
    return World(Population(std::move(cells)), std::move(assign));
}

} // namespace swr
