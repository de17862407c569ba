#pragma once

// Deterministic serialization of every report type. JSON keys are emitted in
// a fixed order so that parse + dump regenerates identical bytes; rationals
// appear as {"num":..,"den":..} plus a "display" string such as "455/8".

#include <string>

#include <json.hpp>

#include "invphi/families.hpp"
#include "invphi/inverse.hpp"
#include "invphi/totient.hpp"

namespace invphi {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, json, csv };

// One row of the A(m) table: phi(A(m)) is defined only when A(m) is integral.
struct TableRow {
    u64 m;
    Rational a;
    std::optional<u64> phi_a;
};

TableRow table_row(u64 m);

ordered_json to_json(const Rational& r);
ordered_json to_json(const TotientValue& t);
ordered_json to_json(const GuptaBound& b);
ordered_json to_json(const PreimageReport& r);
ordered_json to_json(const FamilyVerdict& v);
ordered_json to_json(const FactorialVerdict& v);
ordered_json to_json(const SophieScan& s);
ordered_json to_json(const Pow2Preimage& p);
ordered_json to_json(const NonimageFamily& f);
ordered_json to_json(const TableRow& row);

// "{5, 8, 10, 12}" or "{}"
std::string brace_list(const std::vector<u64>& xs);

std::string render(const TotientValue& t, Format f);
std::string render(const PreimageReport& r, Format f);
std::string render(const GuptaBound& b, Format f);
std::string render(const FamilyVerdict& v, Format f);
std::string render(const FactorialVerdict& v, Format f);
std::string render(const SophieScan& s, u64 bound, Format f);
std::string render(const Pow2Preimage& p, Format f);
std::string render(const NonimageFamily& fam, u64 bound, Format f);
std::string render_lehmer(const std::vector<u64>& solutions, u64 bound, Format f);
std::string render_odd_doubles(const std::vector<u64>& values, u64 bound, Format f);
std::string render_table(const std::vector<TableRow>& rows, Format f);

}  // namespace invphi
