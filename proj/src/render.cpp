#include "invphi/render.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace invphi {

TableRow table_row(u64 m) {
    const GuptaBound b = gupta_bound(m);
    TableRow row{m, b.value, std::nullopt};
    if (b.value.integral()) row.phi_a = phi(b.value.floor());
    return row;
}

std::string brace_list(const std::vector<u64>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

ordered_json to_json(const Rational& r) {
    // parts that fit 64 bits stay json numbers; wider ones become decimal
    // strings so the document remains lossless
    auto part = [](const Rational::bigint& v) {
        if (v <= std::numeric_limits<u64>::max()) return ordered_json(v.convert_to<u64>());
        return ordered_json(v.str());
    };
    return {{"num", part(r.numerator())}, {"den", part(r.denominator())}, {"display", r.str()}};
}

ordered_json to_json(const TotientValue& t) {
    return {{"n", t.n}, {"phi", t.phi}};
}

ordered_json to_json(const GuptaBound& b) {
    return {{"m", b.m},
            {"admissible_primes", b.admissible_primes},
            {"value", to_json(b.value)},
            {"floor", b.floor_value}};
}

ordered_json to_json(const PreimageReport& r) {
    ordered_json j{{"m", r.m},
                   {"in_image", r.in_image},
                   {"elements", r.elements},
                   {"odd_count", r.odd_count},
                   {"even_count", r.even_count}};
    j["bound"] = r.bound ? to_json(*r.bound) : ordered_json(nullptr);
    ordered_json classes = ordered_json::object();
    for (const auto& [residue, members] : r.residue_classes)
        classes[std::to_string(residue)] = members;
    j["residue_classes"] = classes;
    j["lehmer_candidates"] = r.lehmer_candidates;
    return j;
}

ordered_json to_json(const FamilyVerdict& v) {
    ordered_json j{{"m", v.m}, {"family", family_name(v.family)}, {"in_image", v.in_image}};
    j["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
    j["reason"] = v.reason;
    return j;
}

ordered_json to_json(const FactorialVerdict& v) {
    ordered_json j = to_json(v.verdict);
    ordered_json terms = ordered_json::array();
    for (const auto& [p, e] : v.decomposition.odd_terms)
        terms.push_back({{"prime", p}, {"exponent", e}});
    j["decomposition"] = {{"n", v.decomposition.n},
                          {"alpha", v.decomposition.alpha},
                          {"odd_terms", terms}};
    return j;
}

ordered_json to_json(const SophieScan& s) {
    return {{"sophie_germain", s.sophie_germain},
            {"safe_primes", s.safe_primes},
            {"image_members", s.image_members},
            {"nonimage_members", s.nonimage_members}};
}

ordered_json to_json(const Pow2Preimage& p) {
    ordered_json j{{"k", p.k}, {"odd_count", p.odd_count}};
    j["odd_witness"] = p.odd_witness ? ordered_json(*p.odd_witness) : ordered_json(nullptr);
    j["bound"] = to_json(p.bound);
    return j;
}

ordered_json to_json(const NonimageFamily& f) {
    return {{"p", f.p},
            {"members", f.members},
            {"doubles", f.doubles},
            {"congruence_check", f.congruence_check}};
}

ordered_json to_json(const TableRow& row) {
    ordered_json j{{"m", row.m}, {"a", to_json(row.a)}};
    j["phi_a"] = row.phi_a ? ordered_json(*row.phi_a) : ordered_json(nullptr);
    return j;
}

namespace {

std::string dump_line(const ordered_json& j) { return j.dump() + "\n"; }

std::string csv_optional(const std::optional<u64>& v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

std::string render(const TotientValue& t, Format f) {
    switch (f) {
        case Format::json: return dump_line(to_json(t));
        case Format::csv: return "n,phi\n" + std::to_string(t.n) + "," + std::to_string(t.phi) + "\n";
        case Format::text: return "phi(" + std::to_string(t.n) + ") = " + std::to_string(t.phi) + "\n";
    }
    return {};
}

std::string render(const PreimageReport& r, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(to_json(r));
        case Format::csv: {
            std::string s = "n,parity,residue\n";
            for (u64 n : r.elements)
                s += std::to_string(n) + "," + (n % 2 ? "odd" : "even") + "," +
                     std::to_string(n % r.m) + "\n";
            return s;
        }
        case Format::text: {
            std::string s = "phi^-1(" + std::to_string(r.m) + ") = " + brace_list(r.elements) +
                            "; O=" + std::to_string(r.odd_count) +
                            " E=" + std::to_string(r.even_count);
            if (r.bound) s += "; bound=" + r.bound->value.str();
            return s + "\n";
        }
    }
    return {};
}

std::string render(const GuptaBound& b, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(to_json(b));
        case Format::csv: {
            std::string primes;
            for (std::size_t i = 0; i < b.admissible_primes.size(); ++i)
                primes += (i ? ";" : "") + std::to_string(b.admissible_primes[i]);
            return "m,value,floor,admissible_primes\n" + std::to_string(b.m) + "," +
                   b.value.str() + "," + std::to_string(b.floor_value) + "," + primes + "\n";
        }
        case Format::text:
            return "A(" + std::to_string(b.m) + ") = " + b.value.str() +
                   "; floor = " + std::to_string(b.floor_value) +
                   "; admissible primes = " + brace_list(b.admissible_primes) + "\n";
    }
    return {};
}

namespace {

std::string verdict_csv(const FamilyVerdict& v) {
    return "family,m,in_image,witness,reason\n" + family_name(v.family) + "," +
           std::to_string(v.m) + "," + (v.in_image ? "true" : "false") + "," +
           csv_optional(v.witness) + "," + v.reason + "\n";
}

std::string verdict_text(const FamilyVerdict& v) {
    std::string s = "m = " + std::to_string(v.m) + ": " +
                    (v.in_image ? "in image" : "not in image");
    if (v.witness) s += ", witness " + std::to_string(*v.witness);
    return s + " (" + v.reason + ")";
}

}  // namespace

std::string render(const FamilyVerdict& v, Format f) {
    switch (f) {
        case Format::json: return dump_line(to_json(v));
        case Format::csv: return verdict_csv(v);
        case Format::text: return verdict_text(v) + "\n";
    }
    return {};
}

std::string render(const FactorialVerdict& v, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(to_json(v));
        case Format::csv:
            return verdict_csv(v.verdict);
        case Format::text: {
            std::string s = verdict_text(v.verdict);
            s += "; decomposition: alpha = " + std::to_string(v.decomposition.alpha);
            for (const auto& [p, e] : v.decomposition.odd_terms)
                s += ", " + std::to_string(p) + "^" + std::to_string(e);
            return s + "\n";
        }
    }
    return {};
}

std::string render(const SophieScan& s, u64 bound, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(to_json(s));
        case Format::csv: {
            std::string out = "p,two_p,two_p_plus_1,in_image\n";
            std::size_t gi = 0, ni = 0;
            // interleave back into increasing p
            while (gi < s.sophie_germain.size() || ni < s.nonimage_members.size()) {
                const bool take_germain =
                    ni >= s.nonimage_members.size() ||
                    (gi < s.sophie_germain.size() &&
                     2 * s.sophie_germain[gi] < s.nonimage_members[ni]);
                if (take_germain) {
                    const u64 p = s.sophie_germain[gi++];
                    out += std::to_string(p) + "," + std::to_string(2 * p) + "," +
                           std::to_string(2 * p + 1) + ",true\n";
                } else {
                    const u64 d = s.nonimage_members[ni++];
                    out += std::to_string(d / 2) + "," + std::to_string(d) + "," +
                           std::to_string(d + 1) + ",false\n";
                }
            }
            return out;
        }
        case Format::text:
            return "sophie_germain = " + brace_list(s.sophie_germain) + "\n" +
                   "safe_primes = " + brace_list(s.safe_primes) + "\n" +
                   "image_members = " + brace_list(s.image_members) + "\n" +
                   "nonimage_members = " + brace_list(s.nonimage_members) + "\n";
    }
    (void)bound;
    return {};
}

std::string render(const Pow2Preimage& p, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(to_json(p));
        case Format::csv:
            return "k,odd_count,odd_witness,bound\n" + std::to_string(p.k) + "," +
                   std::to_string(p.odd_count) + "," + csv_optional(p.odd_witness) + "," +
                   p.bound.str() + "\n";
        case Format::text: {
            std::string s = "m = 2^" + std::to_string(p.k) + ": O = " + std::to_string(p.odd_count);
            if (p.odd_witness) s += ", odd witness = " + std::to_string(*p.odd_witness);
            return s + "; A(2^" + std::to_string(p.k) + ") = " + p.bound.str() + "\n";
        }
    }
    return {};
}

std::string render(const NonimageFamily& fam, u64 bound, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(to_json(fam));
        case Format::csv: {
            std::string out = "q,double,congruent\n";
            for (std::size_t i = 0; i < fam.members.size(); ++i)
                out += std::to_string(fam.members[i]) + "," + std::to_string(fam.doubles[i]) +
                       "," + (fam.congruence_check[i] ? "true" : "false") + "\n";
            return out;
        }
        case Format::text: {
            bool all = true;
            for (bool c : fam.congruence_check) all = all && c;
            return "S(" + std::to_string(fam.p) + ") up to " + std::to_string(bound) +
                   ": members = " + brace_list(fam.members) +
                   "; doubles = " + brace_list(fam.doubles) + "; all doubles = -1 (mod " +
                   std::to_string(fam.p) + "): " + (all ? "yes" : "NO") + "\n";
        }
    }
    return {};
}

std::string render_lehmer(const std::vector<u64>& solutions, u64 bound, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(ordered_json(solutions));
        case Format::csv: {
            std::string out = "n\n";
            for (u64 n : solutions) out += std::to_string(n) + "\n";
            return out;
        }
        case Format::text:
            if (solutions.empty())
                return "no composite n <= " + std::to_string(bound) + " with phi(n) | n-1\n";
            return "LEHMER SOLUTIONS up to " + std::to_string(bound) + ": " +
                   brace_list(solutions) + "\n";
    }
    return {};
}

std::string render_odd_doubles(const std::vector<u64>& values, u64 bound, Format f) {
    switch (f) {
        case Format::json:
            return dump_line(ordered_json(values));
        case Format::csv: {
            std::string out = "s,witness\n";
            for (u64 s : values) out += std::to_string(s) + "," + std::to_string(2 * s + 1) + "\n";
            return out;
        }
        case Format::text:
            return "odd s with 2s in image, from primes p = 3 (mod 4), p <= " +
                   std::to_string(bound) + ": s = " + brace_list(values) + "\n";
    }
    return {};
}

std::string render_table(const std::vector<TableRow>& rows, Format f) {
    switch (f) {
        case Format::json: {
            ordered_json j = ordered_json::array();
            for (const auto& row : rows) j.push_back(to_json(row));
            return dump_line(j);
        }
        case Format::csv: {
            std::string out = "m,a,phi_a\n";
            for (const auto& row : rows)
                out += std::to_string(row.m) + "," + row.a.str() + "," +
                       (row.phi_a ? std::to_string(*row.phi_a) : "-") + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << std::left << std::setw(8) << "m" << std::setw(10) << "A(m)"
                << "phi(A(m))\n";
            for (const auto& row : rows)
                out << std::left << std::setw(8) << row.m << std::setw(10) << row.a.str()
                    << (row.phi_a ? std::to_string(*row.phi_a) : "-") << "\n";
            return out.str();
        }
    }
    return {};
}

}  // namespace invphi
