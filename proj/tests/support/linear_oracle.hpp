#pragma once

// Test-only linear algebra over exact rationals: a row span with forward
// elimination, used to quotient the free algebra by relation spans
// independently of the library's rewriting engine.

#include <cstddef>
#include <map>

#include "ternary/rational.hpp"

namespace oracle {

using SparseRow = std::map<int, ternary::Rational>;

class RowSpan {
public:
    // Eliminates row against the stored pivots; the remainder is zero exactly
    // when the row lies in the span.
    SparseRow eliminate(SparseRow row) const {
        while (!row.empty()) {
            auto lead = row.begin();
            auto pivot = pivots_.find(lead->first);
            if (pivot == pivots_.end()) {
                SparseRow rest = reduce_tail(std::move(row));
                return rest;
            }
            ternary::Rational factor = lead->second;
            subtract_scaled(row, pivot->second, factor);
        }
        return row;
    }

    bool contains(const SparseRow& row) const { return eliminate(row).empty(); }

    // Adds a row to the span; returns true when the rank grew.
    bool add(SparseRow row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto pivot = pivots_.find(lead->first);
            if (pivot == pivots_.end()) {
                ternary::Rational inv = lead->second.inverse();
                for (auto& [col, c] : row) c *= inv;
                pivots_.emplace(lead->first, std::move(row));
                return true;
            }
            ternary::Rational factor = lead->second;
            subtract_scaled(row, pivot->second, factor);
        }
        return false;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    static void subtract_scaled(SparseRow& row, const SparseRow& pivot_row,
                                const ternary::Rational& factor) {
        for (const auto& [col, c] : pivot_row) {
            auto it = row.find(col);
            ternary::Rational delta = factor * c;
            if (it == row.end()) {
                if (!delta.is_zero()) row.emplace(col, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }

    SparseRow reduce_tail(SparseRow row) const {
        // Leading column has no pivot; still eliminate later columns so the
        // remainder is fully reduced (keeps repeated membership tests cheap).
        auto it = row.begin();
        ++it;
        while (it != row.end()) {
            auto pivot = pivots_.find(it->first);
            if (pivot == pivots_.end()) {
                ++it;
                continue;
            }
            ternary::Rational factor = it->second;
            subtract_scaled(row, pivot->second, factor);
            it = row.upper_bound(pivot->first);
        }
        return row;
    }

    std::map<int, SparseRow> pivots_;
};

}  // namespace oracle
