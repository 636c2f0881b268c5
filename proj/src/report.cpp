#include "gmap/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "gmap/error.hpp"

namespace gmap {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string character_text(const std::optional<int>& c, int m) {
  if (!c) return "mixed";
  std::string s = std::to_string(*c) + " mod " + std::to_string(m);
  if (*c == 0) return s + " (invariant under Z/" + std::to_string(m) + ")";
  if (m % 2 == 0 && *c == m / 2) return s + " (invariant under the index-2 subgroup only)";
  return s;
}

} // namespace

std::size_t max_possible_rank(std::size_t i2_dim, int genus, bool bielliptic) {
  const long bound = bielliptic ? 5L * genus - 5 : 7L * genus - 7;
  return std::min<std::size_t>(i2_dim, static_cast<std::size_t>(std::max(0L, bound)));
}

bool rank_is_exact(const RankReport& r, bool bielliptic) {
  return r.mu2_rank_lower_bound == max_possible_rank(r.i2_dim, r.genus, bielliptic);
}

Json to_json(const RankReport& r) {
  Json branch = Json::array();
  for (const auto& t : r.branch_points) branch.push_back(t.to_string());
  return Json{
      {"record", "rank"},
      {"monodromy", format_monodromy(r.datum)},
      {"m", r.datum.m},
      {"a", r.datum.a},
      {"branch_points", branch},
      {"genus", r.genus},
      {"policy", r.policy},
      {"precision", r.precision_used},
      {"mult_rank", r.mult_rank},
      {"i2_dim", r.i2_dim},
      {"mu2_rank", r.mu2_rank_lower_bound},
      {"stability", r.stability},
      {"stable", r.stable},
      {"elapsed_ms", r.elapsed.count()},
  };
}

RankReport rank_report_from_json(const Json& j) {
  RankReport r;
  r.datum.m = j.at("m").get<int>();
  r.datum.a = j.at("a").get<std::vector<int>>();
  for (const auto& t : j.at("branch_points")) r.branch_points.push_back(Rational::parse(t.get<std::string>()));
  r.genus = j.at("genus").get<int>();
  r.policy = j.at("policy").get<std::string>();
  r.precision_used = j.at("precision").get<std::size_t>();
  r.mult_rank = j.at("mult_rank").get<std::size_t>();
  r.i2_dim = j.at("i2_dim").get<std::size_t>();
  r.mu2_rank_lower_bound = j.at("mu2_rank").get<std::size_t>();
  r.stability = j.at("stability").get<std::string>();
  r.stable = j.at("stable").get<bool>();
  r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
  return r;
}

std::string to_text(const RankReport& r, bool bielliptic) {
  std::ostringstream os;
  const bool exact = rank_is_exact(r, bielliptic);
  os << "monodromy      " << format_monodromy(r.datum) << "  " << shorthand(r.datum) << '\n'
     << "genus          " << r.genus << '\n'
     << "branch points  " << format_branch_points(r.branch_points) << '\n'
     << "precision      " << r.precision_used << " (" << r.policy << ")\n"
     << "mult rank      " << r.mult_rank << '\n'
     << "dim I2(K)      " << r.i2_dim << '\n'
     << "mu2 rank       " << (exact ? "" : ">= ") << r.mu2_rank_lower_bound
     << (exact ? " (exact)" : " (lower bound)") << '\n'
     << "max mu2 rank   " << max_possible_rank(r.i2_dim, r.genus, bielliptic) << '\n'
     << "stable         " << (r.stable ? "yes" : "no") << " (" << r.stability << ")\n"
     << "elapsed        " << std::fixed << std::setprecision(2)
     << static_cast<double>(r.elapsed.count()) / 1000.0 << " s\n";
  return os.str();
}

TableRow table_row(const RankReport& r, bool bielliptic) {
  TableRow row;
  row.genus = r.genus;
  row.monodromy = shorthand(r.datum);
  row.mu2_rank = r.mu2_rank_lower_bound;
  row.exact = rank_is_exact(r, bielliptic);
  row.max_rank = max_possible_rank(r.i2_dim, r.genus, bielliptic);
  row.precision = r.precision_used;
  row.stable = r.stable;
  return row;
}

std::string csv_header() { return "genus,monodromy,rank_mu2,max_rank_mu2,precision,stable"; }

std::string to_csv(const TableRow& row) {
  std::ostringstream os;
  os << row.genus << ',';
  if (row.error) {
    os << ",ERROR(" << *row.error << "),,,";
    return os.str();
  }
  os << row.monodromy << ',' << (row.exact ? "" : ">=") << row.mu2_rank << ',' << row.max_rank << ','
     << row.precision << ',' << (row.stable ? "yes" : "no");
  return os.str();
}

TableRow table_row_from_csv(const std::string& line) {
  const auto cells = split(line, ',');
  if (cells.size() != 6) throw ParseError(0, "expected 6 CSV cells, got " + std::to_string(cells.size()));
  TableRow row;
  try {
    row.genus = std::stoi(cells[0]);
    if (cells[2].rfind("ERROR(", 0) == 0 && cells[2].back() == ')') {
      row.error = cells[2].substr(6, cells[2].size() - 7);
      return row;
    }
    row.monodromy = cells[1];
    std::string rank = cells[2];
    row.exact = rank.rfind(">=", 0) != 0;
    if (!row.exact) rank = rank.substr(2);
    row.mu2_rank = std::stoul(rank);
    row.max_rank = std::stoul(cells[3]);
    row.precision = std::stoul(cells[4]);
  } catch (const std::logic_error&) {
    throw ParseError(0, "malformed CSV row '" + line + "'");
  }
  if (cells[5] != "yes" && cells[5] != "no") throw ParseError(0, "stable must be yes/no");
  row.stable = cells[5] == "yes";
  return row;
}

Json to_json(const TableRow& row) {
  Json j{{"record", "table_row"}, {"genus", row.genus}};
  if (row.error) {
    j["error"] = *row.error;
    return j;
  }
  j["monodromy"] = row.monodromy;
  j["mu2_rank"] = row.mu2_rank;
  j["exact"] = row.exact;
  j["max_rank"] = row.max_rank;
  j["precision"] = row.precision;
  j["stable"] = row.stable;
  return j;
}

TableRow table_row_from_json(const Json& j) {
  TableRow row;
  row.genus = j.at("genus").get<int>();
  if (j.contains("error")) {
    row.error = j.at("error").get<std::string>();
    return row;
  }
  row.monodromy = j.at("monodromy").get<std::string>();
  row.mu2_rank = j.at("mu2_rank").get<std::size_t>();
  row.exact = j.at("exact").get<bool>();
  row.max_rank = j.at("max_rank").get<std::size_t>();
  row.precision = j.at("precision").get<std::size_t>();
  row.stable = j.at("stable").get<bool>();
  return row;
}

Json to_json(const GaloisFamilyClass& c) {
  return Json{{"record", "galois_class"},
              {"g", c.g},
              {"gprime", c.gprime},
              {"class", shorthand(c.representative)},
              {"monodromy", format_monodromy(c.representative)},
              {"s1", c.s1},
              {"s3", c.s3},
              {"r2", c.r2},
              {"eigenspace_dims", eigenspace_dimensions(c.representative)}};
}

Json to_json(const WitnessReport& w) {
  Json quadrics = Json::array();
  for (const auto& q : w.quadrics) {
    Json jq{{"name", q.name},
            {"in_kernel", q.in_kernel},
            {"character", q.character ? Json(*q.character) : Json("mixed")},
            {"invariant", q.invariant()},
            {"precision", q.precision},
            {"mu2_nonzero", q.nonzero()}};
    if (const auto order = vanishing_order(q.mu2)) {
      jq["mu2_order"] = *order;
      jq["mu2_leading"] = q.mu2[*order].to_string();
    }
    quadrics.push_back(std::move(jq));
  }
  return Json{{"record", "witness"},
              {"g", w.family.g},
              {"gprime", w.family.gprime},
              {"class", shorthand(w.family.representative)},
              {"monodromy", format_monodromy(w.family.representative)},
              {"eigenspace_dims", w.eigenspace_dims},
              {"quadrics", quadrics}};
}

std::string to_text(const WitnessReport& w) {
  std::ostringstream os;
  const int m = w.family.representative.m;
  os << "class          " << shorthand(w.family.representative) << " (g=" << w.family.g
     << ", g'=" << w.family.gprime << ")\n"
     << "eigenspaces    d = (" << join_ints(w.eigenspace_dims) << ")\n";
  for (const auto& q : w.quadrics) {
    os << "quadric        " << q.name << '\n'
       << "  in I2(K)     " << (q.in_kernel ? "yes" : "NO") << " (to precision " << q.precision << ")\n"
       << "  character    " << character_text(q.character, m) << '\n';
    if (const auto order = vanishing_order(q.mu2)) {
      os << "  mu2(Q)       nonzero to precision " << q.mu2.precision() << ": order " << *order
         << ", leading coefficient " << q.mu2[*order] << '\n';
    } else {
      os << "  mu2(Q)       zero to precision " << q.mu2.precision() << '\n';
    }
  }
  return os.str();
}

std::string format_branch_points(const std::vector<Rational>& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os.str();
}

std::vector<Rational> parse_branch_points(const std::string& text) {
  std::vector<Rational> out;
  std::size_t offset = 0;
  for (const auto& cell : split(text, ',')) {
    try {
      out.push_back(Rational::parse(cell));
    } catch (const ParseError& e) {
      throw ParseError(offset + e.position(), "bad branch point '" + cell + "'");
    }
    offset += cell.size() + 1;
  }
  return out;
}

} // namespace gmap
