#include "permpoly/table_families.hpp"

#include <algorithm>
#include <set>

#include "permpoly/classify.hpp"

namespace permpoly {

namespace {

using Vecs = std::vector<std::vector<Elem>>;
using Set = std::set<std::vector<Elem>>;

Vecs to_sorted(Set s) {
    Vecs v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), poly_vec_less);
    return v;
}

std::vector<Elem> coeffs6(Elem a1, Elem a2, Elem a3, Elem a4, Elem a5) {
    return {0, a1, a2, a3, a4, a5, 1};
}

std::vector<Elem> square_roots_of_two(const Field& F) {
    std::vector<Elem> roots;
    Elem two = F.from_int(2);
    for (Elem c = 0; c < F.q(); ++c)
        if (F.mul(c, c) == two) roots.push_back(c);
    return roots;
}

std::vector<Elem> nonsquares(const Field& F) {
    std::vector<Elem> out;
    for (Elem a = 1; a < F.q(); ++a)
        if (!F.is_square(a)) out.push_back(a);
    return out;
}

std::vector<Elem> nonzero_squares(const Field& F) {
    std::vector<Elem> out;
    for (Elem a = 1; a < F.q(); ++a)
        if (F.is_square(a)) out.push_back(a);
    return out;
}

}  // namespace

const std::vector<TableRow>& normalized_pp_table() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> t;

        t.push_back({"x2", 2, "x^2 (even q)",
                     [](const Field& F) { return F.p() == 2 && F.q() >= 4; },
                     [](const FieldPtr&) -> Vecs { return {{0, 0, 1}}; }});

        t.push_back({"x3", 3, "x^3 (q not 1 mod 3)",
                     [](const Field& F) { return F.q() % 3 != 1 && F.q() >= 5; },
                     [](const FieldPtr&) -> Vecs { return {{0, 0, 0, 1}}; }});

        t.push_back({"x3-ax", 3, "x^3 - a x, a not a square (char 3)",
                     [](const Field& F) { return F.p() == 3 && F.q() >= 5; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         for (Elem a : nonsquares(*f))
                             out.insert({0, f->neg(a), 0, 1});
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x4-pm-3x", 4, "x^4 +- 3x (q = 7)",
                     [](const Field& F) { return F.q() == 7; },
                     [](const FieldPtr& f) -> Vecs {
                         Elem three = f->from_int(3);
                         return to_sorted({{0, three, 0, 0, 1},
                                           {0, f->neg(three), 0, 0, 1}});
                     }});

        t.push_back({"x4-additive", 4, "x^4 + a1 x^2 + a2 x with only root 0 (even q)",
                     [](const Field& F) { return F.p() == 2 && F.q() >= 8; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         for (Elem a1 = 0; a1 < f->q(); ++a1)
                             for (Elem a2 = 0; a2 < f->q(); ++a2) {
                                 Poly g(f, {0, a2, a1, 0, 1});
                                 bool only_zero = true;
                                 for (Elem c = 1; c < f->q() && only_zero; ++c)
                                     if (g.evaluate(c) == 0) only_zero = false;
                                 if (only_zero) out.insert({0, a2, a1, 0, 1});
                             }
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x5", 5, "x^5 (q not 1 mod 5)",
                     [](const Field& F) { return F.q() % 5 != 1 && F.q() >= 7; },
                     [](const FieldPtr&) -> Vecs { return {{0, 0, 0, 0, 0, 1}}; }});

        t.push_back({"x5-ax", 5, "x^5 - a x, a not a fourth power (char 5)",
                     [](const Field& F) { return F.p() == 5 && F.q() >= 7; },
                     [](const FieldPtr& f) -> Vecs {
                         std::set<Elem> fourth;
                         for (Elem c = 0; c < f->q(); ++c) fourth.insert(f->pow(c, 4));
                         Set out;
                         for (Elem a = 0; a < f->q(); ++a)
                             if (!fourth.count(a))
                                 out.insert({0, f->neg(a), 0, 0, 0, 1});
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x5-sqrt2", 5, "x^5 + 2^(1/2) x (q = 9)",
                     [](const Field& F) { return F.q() == 9; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         for (Elem s : square_roots_of_two(*f))
                             out.insert({0, s, 0, 0, 0, 1});
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x5-pm-2x2", 5, "x^5 +- 2x^2 (q = 7)",
                     [](const Field& F) { return F.q() == 7; },
                     [](const FieldPtr& f) -> Vecs {
                         Elem two = f->from_int(2);
                         return to_sorted({{0, 0, two, 0, 0, 1},
                                           {0, 0, f->neg(two), 0, 0, 1}});
                     }});

        t.push_back({"x5-ax3-pm-x2", 5, "x^5 + a x^3 +- x^2 + 3a^2 x, a not a square (q = 7)",
                     [](const Field& F) { return F.q() == 7; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         Elem three = f->from_int(3);
                         for (Elem a : nonsquares(*f)) {
                             Elem a1 = f->mul(three, f->mul(a, a));
                             out.insert({0, a1, 1, a, 0, 1});
                             out.insert({0, a1, f->neg(1), a, 0, 1});
                         }
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x5-ax3-a2x", 5, "x^5 + a x^3 + 5^(-1) a^2 x (q = 2,3 mod 5)",
                     [](const Field& F) {
                         return (F.q() % 5 == 2 || F.q() % 5 == 3) && F.q() >= 7;
                     },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         Elem inv5 = f->inv(f->from_int(5));
                         for (Elem a = 0; a < f->q(); ++a) {
                             Elem a1 = f->mul(inv5, f->mul(a, a));
                             out.insert({0, a1, 0, a, 0, 1});
                         }
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x5-ax3-3a2x", 5, "x^5 + a x^3 + 3a^2 x, a not a square (q = 13)",
                     [](const Field& F) { return F.q() == 13; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         Elem three = f->from_int(3);
                         for (Elem a : nonsquares(*f))
                             out.insert({0, f->mul(three, f->mul(a, a)), 0, a, 0, 1});
                         return to_sorted(std::move(out));
                     }});

        t.push_back({"x5-2ax3-a2x", 5, "x^5 - 2a x^3 + a^2 x, a not a square (char 5)",
                     [](const Field& F) { return F.p() == 5 && F.q() >= 7; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         for (Elem a : nonsquares(*f))
                             out.insert({0, f->mul(a, a),
                                         0, f->neg(f->mul(f->from_int(2), a)), 0, 1});
                         return to_sorted(std::move(out));
                     }});

        // Degree 6, q = 11: the signs of the x^3 and x coefficients are
        // paired by the derivation.
        t.push_back({"d6-1", 6, "x^6 +- 2x (q = 11)",
                     [](const Field& F) { return F.q() == 11; },
                     [](const FieldPtr& f) -> Vecs {
                         return to_sorted({coeffs6(2, 0, 0, 0, 0),
                                           coeffs6(f->neg(2), 0, 0, 0, 0)});
                     }});
        t.push_back({"d6-2", 6, "x^6 +- 4x (q = 11)",
                     [](const Field& F) { return F.q() == 11; },
                     [](const FieldPtr& f) -> Vecs {
                         return to_sorted({coeffs6(4, 0, 0, 0, 0),
                                           coeffs6(f->neg(4), 0, 0, 0, 0)});
                     }});
        t.push_back({"d6-3", 6, "x^6 +- a^2 x^3 + a x^2 +- 5x, a a nonzero square (q = 11)",
                     [](const Field& F) { return F.q() == 11; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         for (Elem a : nonzero_squares(*f)) {
                             Elem a2 = f->mul(a, a);
                             out.insert(coeffs6(5, a, a2, 0, 0));
                             out.insert(coeffs6(f->neg(5), a, f->neg(a2), 0, 0));
                         }
                         return to_sorted(std::move(out));
                     }});
        t.push_back({"d6-4", 6, "x^6 +- 4a^2 x^3 + a x^2 +- 4x, a not a square (q = 11)",
                     [](const Field& F) { return F.q() == 11; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         for (Elem a : nonsquares(*f)) {
                             Elem fa2 = f->mul(4, f->mul(a, a));
                             out.insert(coeffs6(4, a, fa2, 0, 0));
                             out.insert(coeffs6(f->neg(4), a, f->neg(fa2), 0, 0));
                         }
                         return to_sorted(std::move(out));
                     }});

        // Degree 6, q = 9.
        t.push_back({"d6-5", 6, "x^6 + a^2 x^4 + a^7 b x^3 + a^4 x^2 + a(2b+1)x (q = 9)",
                     [](const Field& F) { return F.q() == 9; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         Elem two = f->from_int(2);
                         for (Elem s : square_roots_of_two(*f)) {
                             const Elem bs[4] = {0, 1, s, f->add(1, s)};
                             for (Elem b : bs)
                                 for (Elem a = 1; a < f->q(); ++a) {
                                     Elem a1 = f->mul(a, f->add(f->mul(two, b), 1));
                                     Elem a2 = f->pow(a, 4);
                                     Elem a3 = f->mul(f->pow(a, 7), b);
                                     Elem a4 = f->mul(a, a);
                                     out.insert(coeffs6(a1, a2, a3, a4, 0));
                                 }
                         }
                         return to_sorted(std::move(out));
                     }});
        t.push_back({"d6-6", 6, "x^6 + a x^5 + 2ab x^4 + ... (q = 9)",
                     [](const Field& F) { return F.q() == 9; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         const Field& F = *f;
                         Elem two = F.from_int(2);
                         for (Elem a = 1; a < F.q(); ++a)
                             for (Elem b = 0; b < F.q(); ++b) {
                                 Elem a5 = a;
                                 Elem a4 = F.mul(two, F.mul(a, b));
                                 Elem a3 = F.add(F.pow(a, 3),
                                                 F.add(F.mul(a, F.mul(b, b)),
                                                       F.mul(two, F.pow(b, 3))));
                                 Elem a2 = F.add(F.mul(two, F.pow(a, 4)),
                                                 F.mul(a, F.pow(b, 3)));
                                 Elem a1 = F.add(F.mul(two, F.pow(a, 5)),
                                                 F.add(F.mul(F.pow(a, 4), b),
                                                       F.mul(two, F.mul(a, F.pow(b, 4)))));
                                 out.insert(coeffs6(a1, a2, a3, a4, a5));
                             }
                         return to_sorted(std::move(out));
                     }});
        t.push_back({"d6-7", 6, "x^6 + a x^5 + 2ab x^4 + ... phi = +-(1 - 2^(1/2)) (q = 9)",
                     [](const Field& F) { return F.q() == 9; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         const Field& F = *f;
                         Elem two = F.from_int(2);
                         for (Elem s : square_roots_of_two(F)) {
                             const Elem phis[2] = {F.sub(1, s), F.neg(F.sub(1, s))};
                             for (Elem phi : phis)
                                 for (Elem a = 1; a < F.q(); ++a)
                                     for (Elem b = 0; b < F.q(); ++b) {
                                         Elem a5 = a;
                                         Elem a4 = F.mul(two, F.mul(a, b));
                                         Elem a3 = F.add(F.mul(a, F.mul(b, b)),
                                                         F.add(F.mul(two, F.pow(b, 3)),
                                                               F.mul(F.pow(a, 3), phi)));
                                         Elem a2 = F.add(F.mul(a, F.pow(b, 3)),
                                                         F.mul(two, F.mul(F.pow(a, 4), phi)));
                                         Elem a1 = F.add(F.mul(s, F.pow(a, 5)),
                                                         F.add(F.mul(two, F.mul(a, F.pow(b, 4))),
                                                               F.mul(F.pow(a, 4), F.mul(b, phi))));
                                         out.insert(coeffs6(a1, a2, a3, a4, a5));
                                     }
                         }
                         return to_sorted(std::move(out));
                     }});
        t.push_back({"d6-8", 6, "x^6 + a x^5 + 2ab x^4 + ... with (2 + 2^(1/2)) a^5 (q = 9)",
                     [](const Field& F) { return F.q() == 9; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         const Field& F = *f;
                         Elem two = F.from_int(2);
                         for (Elem s : square_roots_of_two(F)) {
                             for (Elem a = 1; a < F.q(); ++a)
                                 for (Elem b = 0; b < F.q(); ++b) {
                                     Elem a5 = a;
                                     Elem a4 = F.mul(two, F.mul(a, b));
                                     Elem a3 = F.add(F.mul(two, F.pow(a, 3)),
                                                     F.add(F.mul(a, F.mul(b, b)),
                                                           F.mul(two, F.pow(b, 3))));
                                     Elem a2 = F.add(F.pow(a, 4), F.mul(a, F.pow(b, 3)));
                                     Elem a1 = F.add(F.mul(F.add(two, s), F.pow(a, 5)),
                                                     F.add(F.mul(two, F.mul(F.pow(a, 4), b)),
                                                           F.mul(two, F.mul(a, F.pow(b, 4)))));
                                     out.insert(coeffs6(a1, a2, a3, a4, a5));
                                 }
                         }
                         return to_sorted(std::move(out));
                     }});

        // Degree 6, q = 27.
        t.push_back({"d6-9", 6, "x^6 + a x^5 + 2ab x^4 + (ab^2+2b^3) x^3 + ... (q = 27)",
                     [](const Field& F) { return F.q() == 27; },
                     [](const FieldPtr& f) -> Vecs {
                         Set out;
                         const Field& F = *f;
                         Elem two = F.from_int(2);
                         for (Elem a = 1; a < F.q(); ++a)
                             for (Elem b = 0; b < F.q(); ++b) {
                                 Elem a5 = a;
                                 Elem a4 = F.mul(two, F.mul(a, b));
                                 Elem a3 = F.add(F.mul(a, F.mul(b, b)),
                                                 F.mul(two, F.pow(b, 3)));
                                 Elem a2 = F.add(F.mul(two, F.pow(a, 4)),
                                                 F.mul(a, F.pow(b, 3)));
                                 Elem a1 = F.add(F.mul(F.pow(a, 4), b),
                                                 F.mul(two, F.mul(a, F.pow(b, 4))));
                                 out.insert(coeffs6(a1, a2, a3, a4, a5));
                             }
                         return to_sorted(std::move(out));
                     }});

        return t;
    }();
    return rows;
}

const TableRow& table_row(const std::string& id) {
    for (const TableRow& row : normalized_pp_table())
        if (row.id == id) return row;
    throw UnknownFamily("no table row named " + id);
}

std::vector<std::vector<Elem>> expand_table_family(const FieldPtr& field,
                                                   const std::string& id) {
    const TableRow& row = table_row(id);
    if (!row.applies(*field)) throw UnknownFamily("row " + id + " does not apply here");
    return row.expand(field);
}

std::vector<std::string> table_rows_for(const Field& F, std::uint32_t degree) {
    std::vector<std::string> out;
    if (degree + 2 > F.q()) return out;
    for (const TableRow& row : normalized_pp_table())
        if (row.degree == degree && row.applies(F)) out.push_back(row.id);
    return out;
}

std::vector<std::vector<Elem>> expand_table_union(const FieldPtr& field,
                                                  std::uint32_t degree) {
    Set all;
    for (const std::string& id : table_rows_for(*field, degree)) {
        for (auto& v : expand_table_family(field, id)) all.insert(std::move(v));
    }
    return to_sorted(std::move(all));
}

}  // namespace permpoly
