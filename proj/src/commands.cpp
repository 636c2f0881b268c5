#include "gmap/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <numeric>
#include <sstream>

#include "gmap/cache.hpp"
#include "gmap/error.hpp"
#include "gmap/report.hpp"
#include "gmap/witness.hpp"

namespace gmap {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Error resource_error(const std::string& what) {
  return Error(ErrorCode::ResourceCapExceeded, "cli-report", what);
}

void check_genus(int g, const Limits& limits) {
  if (g > limits.max_genus) {
    throw resource_error("genus " + std::to_string(g) + " exceeds the cap of " +
                         std::to_string(limits.max_genus) + " (raise it with --max-genus)");
  }
}

void check_precision(std::size_t prec, const Limits& limits) {
  if (prec > limits.max_precision) {
    throw resource_error("precision " + std::to_string(prec) + " exceeds the cap of " +
                         std::to_string(limits.max_precision) + " (raise it with --max-prec)");
  }
}

std::size_t parse_size(const std::string& text, std::size_t offset) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(offset, "expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoul(text);
  } catch (const std::out_of_range&) {
    throw ParseError(offset, "integer '" + text + "' out of range");
  }
}

PrecisionPolicy choose_policy(const CommandOptions& opt, int g) {
  if (opt.precision && opt.escalate) throw UsageError("--prec and --escalate are mutually exclusive");
  PrecisionPolicy policy = opt.escalate ? parse_escalate(*opt.escalate)
                                        : PrecisionPolicy::fixed(opt.precision.value_or(default_precision(g)));
  check_precision(policy.kind == PrecisionPolicy::Kind::Fixed ? policy.start : policy.max, opt.limits);
  return policy;
}

// Branch points in the order of normalize(d): the entry that normalize moves
// to the front is swapped the same way.
std::vector<Rational> branch_points_for(const MonodromyDatum& original, const CommandOptions& opt) {
  if (!opt.branch_points) return default_branch_points(original.branch_count());
  std::vector<Rational> t = parse_branch_points(*opt.branch_points);
  if (t.size() != original.branch_count()) {
    throw UsageError("--branch-points has " + std::to_string(t.size()) + " entries but the datum has " +
                     std::to_string(original.branch_count()) + " branch points");
  }
  const auto unit = std::find_if(original.a.begin(), original.a.end(),
                                 [&](int x) { return std::gcd(x, original.m) == 1; });
  if (unit != original.a.end()) std::swap(t.front(), t[static_cast<std::size_t>(unit - original.a.begin())]);
  return t;
}

std::unique_ptr<ResultCache> open_cache(const CommandOptions& opt) {
  if (opt.cache) return std::make_unique<ResultCache>(*opt.cache);
  if (auto env = ResultCache::path_from_environment()) return std::make_unique<ResultCache>(*env);
  return nullptr;
}

RankReport cached_rank(const MonodromyDatum& d, const std::vector<Rational>& t, const PrecisionPolicy& policy,
                       ResultCache* cache, kernels::Execution ex) {
  if (cache) {
    if (auto hit = cache->lookup(d, t, policy.to_string())) return *hit;
  }
  RankReport report = stable_rank(d, t, policy, ex);
  if (cache) cache->append(report);
  return report;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// Runs body and maps exceptions onto exit codes.
template <typename Body>
CommandResult guarded(Body body) {
  CommandResult result;
  try {
    body(result);
  } catch (const ParseError& e) {
    result.exit_code = exit_code::usage;
    result.err += "parse error: " + std::string(e.what()) + "\n";
  } catch (const UsageError& e) {
    result.exit_code = exit_code::usage;
    result.err += "usage error: " + std::string(e.what()) + "\n";
  } catch (const Error& e) {
    result.exit_code = e.code() == ErrorCode::ResourceCapExceeded ? exit_code::resource : exit_code::domain;
    result.err += std::string(to_string(e.code())) + " [" + e.module() + "]: " + e.what() + "\n";
  }
  return result;
}

void require_format(const CommandOptions& opt, std::initializer_list<OutputFormat> allowed, const char* cmd) {
  if (std::find(allowed.begin(), allowed.end(), opt.format) == allowed.end()) {
    throw UsageError(std::string("format not supported by '") + cmd + "'");
  }
}

} // namespace

PrecisionPolicy parse_escalate(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw ParseError(0, "escalate policy must look like start:factor:max");
  const std::size_t start = parse_size(text.substr(0, first), 0);
  const std::size_t factor = parse_size(text.substr(first + 1, second - first - 1), first + 1);
  const std::size_t max = parse_size(text.substr(second + 1), second + 1);
  if (start < 2) throw ParseError(0, "start precision must be at least 2");
  if (factor < 2) throw ParseError(first + 1, "escalation factor must be at least 2");
  if (max < start) throw ParseError(second + 1, "max precision is below the start precision");
  return PrecisionPolicy::escalate(start, factor, max);
}

std::pair<int, int> parse_genus_range(const std::string& text) {
  const auto dots = text.find("..");
  const std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
  const std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
  const auto a = static_cast<int>(parse_size(lo, 0));
  const auto b = static_cast<int>(parse_size(hi, dots == std::string::npos ? 0 : dots + 2));
  if (a > b) throw ParseError(0, "empty genus range '" + text + "'");
  return {a, b};
}

bool is_bielliptic_datum(const MonodromyDatum& d) {
  if (d.m != 4) return false;
  return std::count_if(d.a.begin(), d.a.end(), [](int x) { return x % 2 != 0; }) == 4;
}

CommandResult cmd_rank(const std::string& monodromy, const CommandOptions& opt) {
  return guarded([&](CommandResult& res) {
    require_format(opt, {OutputFormat::text, OutputFormat::json}, "rank");
    const MonodromyDatum original = parse_monodromy(monodromy);
    const auto violations = validate(original);
    if (!violations.empty()) {
      for (const auto& v : violations) res.err += "InvalidDatum [monodromy]: " + v.message + "\n";
      res.exit_code = exit_code::domain;
      return;
    }
    const int g = genus(original);
    check_genus(g, opt.limits);
    const PrecisionPolicy policy = choose_policy(opt, g);
    const std::vector<Rational> t = branch_points_for(original, opt);
    const MonodromyDatum d = normalize(original);

    auto cache = open_cache(opt);
    const RankReport report = cached_rank(d, t, policy, cache.get(), opt.execution);
    const bool bielliptic = is_bielliptic_datum(d);
    res.out = opt.format == OutputFormat::json ? to_json(report).dump() + "\n" : to_text(report, bielliptic);
    for (const auto& v : report.invariant_violations()) res.err += "warning: " + v + "\n";
  });
}

CommandResult cmd_table(const std::string& range, const CommandOptions& opt) {
  return guarded([&](CommandResult& res) {
    const auto [lo, hi] = parse_genus_range(range);
    check_genus(hi, opt.limits);
    if (opt.branch_points) throw UsageError("--branch-points does not apply to 'table'");
    auto cache = open_cache(opt);
    const bool bielliptic = opt.gprime == 1;

    std::vector<TableRow> rows;
    for (int g = lo; g <= hi; ++g) {
      TableRow row;
      row.genus = g;
      try {
        const auto classes = enumerate_galois(g, opt.gprime);
        if (opt.class_index >= classes.size()) {
          throw Error(ErrorCode::InvalidArgument, "cli-report",
                      "class " + std::to_string(opt.class_index + 1) + " does not exist for g=" + std::to_string(g));
        }
        const MonodromyDatum d = normalize(classes[opt.class_index].representative);
        const PrecisionPolicy policy = choose_policy(opt, g);
        const RankReport report =
            cached_rank(d, default_branch_points(d.branch_count()), policy, cache.get(), opt.execution);
        row = table_row(report, bielliptic);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ResourceCapExceeded) throw;
        row.error = std::string(to_string(e.code()));
        res.err += "g=" + std::to_string(g) + ": " + std::string(to_string(e.code())) + " [" + e.module() +
                   "]: " + e.what() + "\n";
        res.exit_code = exit_code::domain;
      }
      rows.push_back(row);
    }

    std::ostringstream os;
    switch (opt.format) {
    case OutputFormat::csv:
      os << csv_header() << '\n';
      for (const auto& r : rows) os << to_csv(r) << '\n';
      break;
    case OutputFormat::json:
      for (const auto& r : rows) os << to_json(r).dump() << '\n';
      break;
    case OutputFormat::text:
      os << std::left << std::setw(6) << "g" << std::setw(22) << "monodromy" << std::setw(10) << "rank"
         << std::setw(10) << "max" << std::setw(8) << "prec" << "stable\n";
      for (const auto& r : rows) {
        os << std::setw(6) << r.genus;
        if (r.error) {
          os << "error: " << *r.error << '\n';
          continue;
        }
        os << std::setw(22) << r.monodromy << std::setw(10)
           << ((r.exact ? "" : ">= ") + std::to_string(r.mu2_rank)) << std::setw(10) << r.max_rank
           << std::setw(8) << r.precision << (r.stable ? "yes" : "no") << '\n';
      }
      break;
    }
    res.out = os.str();
  });
}

CommandResult cmd_enumerate(int g, int gprime, const CommandOptions& opt) {
  return guarded([&](CommandResult& res) {
    require_format(opt, {OutputFormat::text, OutputFormat::json}, "enumerate");
    check_genus(g, opt.limits);
    const auto classes = enumerate_galois(g, gprime);
    std::ostringstream os;
    if (opt.format == OutputFormat::json) {
      for (const auto& c : classes) os << to_json(c).dump() << '\n';
    } else {
      os << "g=" << g << " g'=" << gprime << ": " << classes.size() << (classes.size() == 1 ? " class\n" : " classes\n");
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& d = classes[k].representative;
        os << "  " << k + 1 << ". " << std::left << std::setw(18) << shorthand(d) << std::setw(24)
           << format_monodromy(d) << "d = (" << join(eigenspace_dimensions(d), ", ") << ")\n";
      }
    }
    res.out = os.str();
  });
}

CommandResult cmd_witness(int g, int gprime, const CommandOptions& opt) {
  return guarded([&](CommandResult& res) {
    require_format(opt, {OutputFormat::text, OutputFormat::json}, "witness");
    check_genus(g, opt.limits);
    if (opt.escalate) throw UsageError("--escalate does not apply to 'witness'; use --prec");
    if (opt.precision) check_precision(*opt.precision, opt.limits);
    const WitnessReport report =
        find_witness(g, gprime, opt.class_index, opt.precision, opt.limits.max_precision);
    res.out = opt.format == OutputFormat::json ? to_json(report).dump() + "\n" : to_text(report);
    const bool ok = std::all_of(report.quadrics.begin(), report.quadrics.end(),
                                [](const WitnessQuadric& q) { return q.in_kernel && q.nonzero(); });
    if (!ok) {
      res.err += "witness not confirmed: a quadric is outside I2(K) or has vanishing mu2 to precision\n";
      res.exit_code = exit_code::domain;
    }
  });
}

CommandResult cmd_validate(const std::string& monodromy, const CommandOptions& opt) {
  return guarded([&](CommandResult& res) {
    require_format(opt, {OutputFormat::text, OutputFormat::json}, "validate");
    const MonodromyDatum d = parse_monodromy(monodromy);
    const auto violations = validate(d);
    Json j{{"record", "validate"}, {"monodromy", format_monodromy(d)}, {"valid", violations.empty()}};
    std::ostringstream os;
    if (!violations.empty()) {
      Json list = Json::array();
      for (const auto& v : violations) {
        list.push_back(Json{{"kind", to_string(v.kind)}, {"message", v.message}});
        os << "invalid: " << to_string(v.kind) << ": " << v.message << '\n';
      }
      j["violations"] = list;
      res.exit_code = exit_code::domain;
    } else {
      const int g = genus(d);
      j["genus"] = g;
      j["eigenspace_dims"] = eigenspace_dimensions(d);
      os << "valid\n"
         << "genus        " << g << '\n'
         << "eigenspaces  d = (" << join(eigenspace_dimensions(d), ", ") << ")\n";
      try {
        const MonodromyDatum n = normalize(d);
        j["normalized"] = format_monodromy(n);
        os << "normalized   " << format_monodromy(n) << "  " << shorthand(n) << '\n';
      } catch (const Error& e) {
        j["normalized"] = nullptr;
        os << "normalized   none (" << e.what() << ")\n";
      }
    }
    res.out = opt.format == OutputFormat::json ? j.dump() + "\n" : os.str();
  });
}

} // namespace gmap
