#include "coxlow/group.hpp"

#include <json.hpp>

#include "coxlow/error.hpp"

namespace coxlow {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(std::string const& field, std::string const& why) {
  throw Error(ErrorCode::ValidationError, field + ": " + why);
}

unsigned parse_bond(json const& v, std::string const& field) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return CoxeterMatrix::kInfinity;
    invalid(field, "expected an integer or \"inf\"");
  }
  if (!v.is_number_integer()) invalid(field, "expected an integer or \"inf\"");
  auto m = v.get<long long>();
  if (m < 1) invalid(field, "bond label must be >= 1");
  return static_cast<unsigned>(m);
}

Rational parse_override_value(json const& v, std::string const& field) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number()) return rational_from_double(v.get<double>());
  } catch (Error const&) {
    invalid(field, "not a rational number");
  }
  invalid(field, "expected a number or a \"p/q\" string");
}

}  // namespace

GroupSpec parse_group_file(std::string const& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) invalid("<root>", "expected a JSON object");
  if (!doc.contains("rank")) invalid("rank", "missing");
  if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() < 1) {
    invalid("rank", "expected a positive integer");
  }
  auto n = static_cast<std::size_t>(doc["rank"].get<long long>());

  if (!doc.contains("coxeter") || !doc["coxeter"].is_array()) {
    invalid("coxeter", "missing or not an array");
  }
  auto const& rows = doc["coxeter"];
  if (rows.size() != n) invalid("coxeter", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<unsigned>> entries(n, std::vector<unsigned>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::string row_field = "coxeter[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) {
      invalid(row_field, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::string field = row_field + "[" + std::to_string(j) + "]";
      unsigned m = parse_bond(rows[i][j], field);
      if (i == j && m != 1) invalid(field, "diagonal entries must be 1");
      if (i != j && m == 1) invalid(field, "off-diagonal entries must be >= 2 or \"inf\"");
      entries[i][j] = m;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries[i][j] != entries[j][i]) {
        invalid("coxeter[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                "matrix is not symmetric");
      }
    }
  }

  GroupSpec spec{doc.value("name", std::string{}), CoxeterMatrix(entries), {},
                 Backend::Float};

  if (doc.contains("gram_overrides")) {
    auto const& list = doc["gram_overrides"];
    if (!list.is_array()) invalid("gram_overrides", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string field = "gram_overrides[" + std::to_string(k) + "]";
      auto const& item = list[k];
      if (!item.is_object() || !item.contains("pair") || !item.contains("value")) {
        invalid(field, "expected {\"pair\": [i, j], \"value\": v}");
      }
      auto const& pair = item["pair"];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        invalid(field + ".pair", "expected two generator indices");
      }
      auto s = pair[0].get<long long>(), t = pair[1].get<long long>();
      if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= n ||
          static_cast<std::size_t>(t) >= n || s == t) {
        invalid(field + ".pair", "indices out of range");
      }
      if (!spec.matrix.is_infinite(static_cast<Generator>(s), static_cast<Generator>(t))) {
        invalid(field + ".pair", "override on a finite bond");
      }
      Rational value = parse_override_value(item["value"], field + ".value");
      if (value > -1) invalid(field + ".value", "must be <= -1");
      spec.overrides.push_back(
          GramOverride{static_cast<Generator>(s), static_cast<Generator>(t), value});
    }
  }

  if (doc.contains("backend")) {
    auto const& b = doc["backend"];
    if (b == "float") {
      spec.backend = Backend::Float;
    } else if (b == "rational") {
      spec.backend = Backend::Rational;
    } else {
      invalid("backend", "expected \"float\" or \"rational\"");
    }
  }
  return spec;
}

std::string group_to_json(GroupSpec const& spec) {
  json doc;
  if (!spec.name.empty()) doc["name"] = spec.name;
  std::size_t n = spec.matrix.rank();
  doc["rank"] = n;
  json rows = json::array();
  for (Generator i = 0; i < n; ++i) {
    json row = json::array();
    for (Generator j = 0; j < n; ++j) {
      if (spec.matrix.is_infinite(i, j)) {
        row.push_back("inf");
      } else {
        row.push_back(spec.matrix(i, j));
      }
    }
    rows.push_back(row);
  }
  doc["coxeter"] = rows;
  json overrides = json::array();
  for (auto const& o : spec.overrides) {
    overrides.push_back({{"pair", {o.s, o.t}}, {"value", o.value.str()}});
  }
  doc["gram_overrides"] = overrides;
  doc["backend"] = backend_name(spec.backend);
  return doc.dump(2);
}

std::vector<GroupSpec> standard_battery() {
  constexpr unsigned inf = CoxeterMatrix::kInfinity;
  struct Entry {
    char const* name;
    unsigned m01, m12, m02;
  };
  static constexpr Entry entries[] = {
      {"(2,2,2)", 2, 2, 2},       {"(3,2,2)", 3, 2, 2},
      {"(3,3,2)", 3, 3, 2},       {"(4,3,2)", 4, 3, 2},
      {"(5,3,2)", 5, 3, 2},       {"(3,3,3)", 3, 3, 3},
      {"(4,4,2)", 4, 4, 2},       {"(6,3,2)", 6, 3, 2},
      {"(3,3,4)", 3, 3, 4},       {"(2,3,7)", 2, 3, 7},
      {"(4,4,4)", 4, 4, 4},       {"(2,2,inf)", 2, 2, inf},
      {"(2,inf,inf)", 2, inf, inf}, {"(inf,inf,inf)", inf, inf, inf},
      {"(inf,3,3)", inf, 3, 3},
  };
  std::vector<GroupSpec> out;
  for (auto const& e : entries) {
    out.push_back(GroupSpec{e.name, CoxeterMatrix::rank3(e.m01, e.m12, e.m02), {},
                            Backend::Float});
  }
  out.push_back(GroupSpec{"(inf,inf,inf)+override(0,1)=-3/2",
                          CoxeterMatrix::rank3(inf, inf, inf),
                          {GramOverride{0, 1, Rational(-3, 2)}},
                          Backend::Float});
  return out;
}

bool has_rational_form(GroupSpec const& spec) {
  std::size_t n = spec.matrix.rank();
  for (Generator i = 0; i < n; ++i) {
    for (Generator j = i + 1; j < n; ++j) {
      unsigned m = spec.matrix(i, j);
      if (!spec.matrix.is_infinite(i, j) && m != 2 && m != 3) return false;
    }
  }
  return true;
}

}  // namespace coxlow
