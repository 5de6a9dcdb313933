// Command-line front end for the hypergraph spectral-moment library.

#include "hgm/counting.hpp"
#include "hgm/errors.hpp"
#include "hgm/families.hpp"
#include "hgm/io.hpp"
#include "hgm/moments.hpp"
#include "hgm/order.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <regex>
#include <sstream>
#include <thread>

namespace {

using namespace hgm;

enum Exit { ok = 0, not_matched = 1, bad_input = 2, guard_exceeded = 3 };

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Hypergraph from --in (file or "-") or --family (inline JSON or @file).
UniformHypergraph load_input(const std::string& in, const std::string& family) {
  if (!in.empty() && !family.empty()) throw ParseError("give either --in or --family, not both");
  if (!family.empty()) {
    const auto text = family.front() == '@' ? read_source(family.substr(1)) : family;
    return build_family(parse_family_spec(text));
  }
  if (in.empty()) throw ParseError("missing input: --in or --family");
  try {
    return parse_hypergraph(read_source(in));
  } catch (const ParseError& error) {
    throw ParseError(in + ": " + error.what());
  }
}

/// Work-sharing pool; the first exception thrown by a worker is rethrown to the caller.
ParallelFor thread_pool(unsigned threads) {
  if (threads <= 1) return serial_executor();
  return [threads](std::size_t count, const std::function<void(std::size_t)>& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    };
    std::vector<std::jthread> pool;
    const auto spawn = std::min<std::size_t>(threads, count);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  };
}

std::vector<std::pair<std::string, int>> parse_patterns(const std::vector<std::string>& names) {
  static const std::regex shape("([PCSQW])([0-9]+)");
  std::vector<std::pair<std::string, int>> out;
  for (const auto& name : names) {
    std::smatch match;
    if (!std::regex_match(name, match, shape)) {
      throw ParseError("pattern '" + name + "': expected P<t>, C<t>, S3, Q<t> or W<t>");
    }
    out.emplace_back(match[1].str(), std::stoi(match[2].str()));
  }
  return out;
}

void log_cost(const MomentOptions& options, std::uint64_t work, double seconds) {
  std::cerr << "cost: " << work << " search nodes (limit " << options.cost_limit << " per moment), " << seconds
            << " s\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral moments and S-order tools for uniform hypergraphs"};
  app.require_subcommand(1);
  std::uint64_t cost_limit = default_cost_limit();
  unsigned threads = 1;
  std::string format = "json";
  app.add_option("--cost-limit", cost_limit, "Search-node budget per moment (default HGM_COST_LIMIT or 5e8)");
  app.add_option("--threads", threads, "Worker threads for class-wide computations")->check(CLI::Range(1U, 256U));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string in;
  std::string family;
  std::vector<std::string> inputs;
  int d_max = 0;

  auto* build = app.add_subcommand("build", "Build a family member and print its hypergraph JSON");
  build->add_option("--family", family, "FamilySpec JSON, or @file")->required();

  auto* moments = app.add_subcommand("moments", "Print S_0..S_{d_max}");
  moments->add_option("--in", in, "Hypergraph JSON file, - for stdin");
  moments->add_option("--family", family, "FamilySpec JSON, or @file");
  moments->add_option("--d-max", d_max, "Largest moment index")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> patterns{"P1", "P2", "P3", "P4", "C3", "C4", "S3", "Q4", "W4"};
  auto* count = app.add_subcommand("count", "Count named subhypergraphs");
  count->add_option("--in", in, "Hypergraph JSON file, - for stdin");
  count->add_option("--family", family, "FamilySpec JSON, or @file");
  count->add_option("--pattern", patterns, "Patterns such as P3, C4, S3, Q4, W5");

  auto* compare = app.add_subcommand("compare", "Compare two hypergraphs in the truncated S-order");
  compare->add_option("--in", inputs, "Two hypergraph JSON files")->required()->expected(2);
  compare->add_option("--d-max", d_max, "Largest moment index")->required()->check(CLI::NonNegativeNumber);

  int k = 3;
  int m = 0;
  int g = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List linear bicyclic classes in canonical order");
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--m", m)->required();
  enumerate->add_option("--g", g, "Restrict to girth g");

  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Check a theorem's extremal hypergraph by exhaustive search");
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"T1", "T2", "T3", "T4"}));
  verify->add_option("--k", k)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--g", g)->required();
  verify->add_option("--d-max", d_max, "Largest moment index (default 4k)");

  for (auto* sub : {build, moments, count, compare, enumerate, verify}) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? Exit::ok : Exit::bad_input;
  }

  const MomentOptions options(cost_limit);
  const bool csv = format == "csv";
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*build) {
      std::cout << emit_hypergraph(load_input("", family)) << '\n';
    } else if (*moments) {
      const auto h = load_input(in, family);
      std::vector<MomentEntry> rows;
      std::uint64_t work = 0;
      for (int d = 0; d <= d_max; ++d) {
        if (auto closed = closed_form_moment(h, d)) {
          rows.push_back({d, std::move(*closed), MomentMethod::closed});
        } else {
          auto result = spectral_moment_detailed(h, d, options);
          work += result.work;
          rows.push_back({d, std::move(result.value), MomentMethod::enumerated});
        }
      }
      std::cout << (csv ? moments_csv(rows) : moments_json(rows));
      log_cost(options, work, seconds_since(start));
    } else if (*count) {
      const auto h = load_input(in, family);
      std::vector<PatternCount> rows;
      for (const auto& [name, t] : parse_patterns(patterns)) rows.push_back({name, t, count_named_pattern(h, name, t)});
      std::cout << (csv ? counts_csv(rows) : counts_json(rows));
    } else if (*compare) {
      const auto a = load_input(inputs[0], "");
      const auto b = load_input(inputs[1], "");
      const auto outcome = s_compare(a, b, d_max, options);
      if (csv) {
        std::cout << "relation,first_diff,d_max\n"
                  << to_string(outcome.relation) << ','
                  << (outcome.first_diff ? std::to_string(*outcome.first_diff) : std::string()) << ',' << d_max
                  << '\n';
      } else {
        std::cout << compare_json(outcome);
      }
    } else if (*enumerate) {
      const auto members = enumerate_linear_bicyclic(k, m, g > 0 ? std::optional<int>(g) : std::nullopt);
      if (csv) {
        std::cout << "index,n,m,girth,base,canonical_form\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
          const auto& h = members[i];
          const auto base = identify_base(h);
          std::cout << i << ',' << h.num_vertices() << ',' << h.num_edges() << ',' << girth(h).value_or(0) << ','
                    << (base ? to_string(base->kind) + std::to_string(base->i) : std::string("?")) << ','
                    << canonical_form(h).hex() << '\n';
        }
      } else {
        std::cout << "[\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
          std::cout << "  " << emit_hypergraph(members[i]) << (i + 1 < members.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
      }
      std::cerr << members.size() << " classes\n";
    } else if (*verify) {
      const auto id = *theorem_from_string(theorem);
      const int depth = verify->count("--d-max") ? d_max : 4 * k;
      const auto report = verify_theorem(id, k, m, g, depth, options, thread_pool(threads));
      std::cout << report_json(report);
      std::cerr << to_string(report.status) << ", class size " << report.class_size << ", "
                << seconds_since(start) << " s (cost limit " << options.cost_limit << " per moment)\n";
      return report.status == VerifyStatus::match ? Exit::ok : Exit::not_matched;
    }
  } catch (const CostGuardExceeded& error) {
    std::cerr << "cost guard exceeded: " << error.what() << '\n';
    return Exit::guard_exceeded;
  } catch (const ParseError& error) {
    std::cerr << "parse error: " << error.what() << '\n';
    return Exit::bad_input;
  } catch (const std::invalid_argument& error) {
    std::cerr << "invalid input: " << error.what() << '\n';
    return Exit::bad_input;
  }
  return Exit::ok;
}
