#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

// One parametric row of the normalized-permutation-polynomial table.  Where
// a row involves the square root of 2, the symbol denotes either root;
// expansion takes the union over both choices, with set semantics.
struct TableRow {
    std::string id;
    std::uint32_t degree;
    std::string description;
    std::function<bool(const Field&)> applies;
    std::function<std::vector<std::vector<Elem>>(const FieldPtr&)> expand;
};

// Registry of all rows, degrees 2 through 6.
const std::vector<TableRow>& normalized_pp_table();

// Row lookup by id; throws UnknownFamily.
const TableRow& table_row(const std::string& id);

// Expansion of one row over a field (must apply).
std::vector<std::vector<Elem>> expand_table_family(const FieldPtr& field,
                                                   const std::string& id);

// Ids of the rows applicable to (field, degree).
std::vector<std::string> table_rows_for(const Field& F, std::uint32_t degree);

// Sorted, deduplicated union of all applicable rows.
std::vector<std::vector<Elem>> expand_table_union(const FieldPtr& field,
                                                  std::uint32_t degree);

}  // namespace permpoly
