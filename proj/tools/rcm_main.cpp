// rcm — exact calculator for groups of regular circulant matrices.
//
// Subcommands:
//   order      closed-form group order over F_{p^t} or Z/aZ
//   table      order tables over ranges of (p, t, n), CSV or JSON
//   enumerate  brute-force count (and optional listing) of regular circulants
//   canonical  block-Toeplitz canonical form data of a circulant over F_{p^t}
//   verify     property suites comparing formulas against oracles
//
// Commands print a JSON envelope {schema, command, params, payload,
// elapsed_ms}; identical inputs always produce byte-identical payloads
// (wall-clock time lives only in elapsed_ms).  `table` without --out and
// `verify` print their natural raw output instead (a CSV/JSON table, one
// status line per check).
//
// Exit codes: 0 success, 2 usage, 3 I/O, 4 enumeration budget exceeded,
// 5 domain error (singular or otherwise invalid input).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcm/circulant.hpp"
#include "rcm/finite_field.hpp"
#include "rcm/json_io.hpp"
#include "rcm/lifting.hpp"
#include "rcm/orders.hpp"
#include "rcm/structure.hpp"
#include "rcm/verify.hpp"
#include "rcm/zmod.hpp"

namespace {

using rcm::u32;
using rcm::u64;
using json = rcm::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict p^t syntax: a prime base, a caret, an exponent >= 1.
std::pair<u64, u32> parse_prime_power(const std::string& text) {
  static const std::regex form(R"(^([0-9]+)\^([0-9]+)$)");
  std::smatch match;
  if (!std::regex_match(text, match, form))
    throw std::invalid_argument("--field expects the form p^t, e.g. 2^1 or 3^2");
  u64 p = 0;
  u64 t = 0;
  try {
    p = std::stoull(match[1].str());
    t = std::stoull(match[2].str());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("--field numbers out of range");
  }
  if (!rcm::is_prime(p))
    throw std::invalid_argument("--field base " + match[1].str() + " is not prime");
  if (t < 1) throw std::invalid_argument("--field exponent must be >= 1");
  if (t > 64) throw std::invalid_argument("--field exponent too large");
  return {p, static_cast<u32>(t)};
}

std::vector<u64> parse_u64_list(const std::string& text, const char* what) {
  std::vector<u64> values;
  if (text.empty()) return values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(std::string(what) +
                                  ": expected a comma-separated list of numbers");
    try {
      values.push_back(std::stoull(item));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument(std::string(what) + ": number out of range");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

u64 elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  const auto delta = std::chrono::steady_clock::now() - start;
  return static_cast<u64>(
      std::chrono::duration_cast<std::chrono::milliseconds>(delta).count());
}

void print_envelope(const std::string& command, const json& params,
                    const json& payload, u64 elapsed_ms) {
  const json envelope = {{"schema", "rcm/1"},
                         {"command", command},
                         {"params", params},
                         {"payload", payload},
                         {"elapsed_ms", elapsed_ms}};
  std::cout << envelope.dump(2) << "\n";
}

struct OrderArgs {
  std::string field;
  u64 mod = 0;
  u32 n = 0;
};

int run_order(const OrderArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  if (args.field.empty() == (args.mod == 0))
    throw std::invalid_argument("order: give exactly one of --field or --mod");
  json params;
  rcm::GroupOrder result;
  if (!args.field.empty()) {
    const auto [p, t] = parse_prime_power(args.field);
    result = rcm::order_rc_field(p, t, args.n);
    params = {{"field", args.field}, {"n", args.n}};
  } else {
    result = rcm::order_rc_zmod(args.mod, args.n);
    params = {{"mod", args.mod}, {"n", args.n}};
  }
  print_envelope("order", params, rcm::group_order_to_json(result),
                 elapsed_ms_since(start));
  return 0;
}

struct TableArgs {
  std::string p_list;
  u32 t_max = 1;
  u32 n_max = 0;
  std::string format = "csv";
  std::string out;
};

int run_table(const TableArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<u64> primes = parse_u64_list(args.p_list, "--p-list");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (u64 p : primes)
    if (!rcm::is_prime(p))
      throw std::invalid_argument("--p-list entry " + std::to_string(p) +
                                  " is not prime");

  std::vector<rcm::GroupOrder> rows;
  for (u64 p : primes)
    for (u32 t = 1; t <= args.t_max; ++t)
      for (u32 n = 1; n <= args.n_max; ++n)
        rows.push_back(rcm::order_rc_field(p, t, n));

  std::string rendered;
  if (args.format == "csv") {
    rendered = "p,t,n,order\n";
    for (const auto& row : rows)
      rendered += std::to_string(row.p) + "," + std::to_string(row.t) + "," +
                  std::to_string(row.n) + "," + row.value.get_str() + "\n";
  } else {
    json array = json::array();
    for (const auto& row : rows) array.push_back(rcm::group_order_to_json(row));
    rendered = array.dump(2) + "\n";
  }

  if (args.out.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw IoError("cannot open " + args.out + " for writing");
  file << rendered;
  file.flush();
  if (!file) throw IoError("failed writing " + args.out);
  const json params = {{"p_list", primes},
                       {"t_max", args.t_max},
                       {"n_max", args.n_max},
                       {"format", args.format},
                       {"out", args.out}};
  const json payload = {{"format", args.format},
                        {"rows", rows.size()},
                        {"path", args.out}};
  print_envelope("table", params, payload, elapsed_ms_since(start));
  return 0;
}

struct EnumerateArgs {
  std::string field;
  u64 mod = 0;
  u32 n = 0;
  u64 budget = u64{1} << 24;
  bool det_one = false;
  bool emit = false;
};

template <class R>
json enumerate_payload(const R& ring, const EnumerateArgs& args) {
  rcm::EnumerateOptions opt;
  opt.budget = args.budget;
  opt.det_one = args.det_one;
  json vectors = json::array();
  if (args.emit)
    opt.emit = [&vectors](const std::vector<u64>& codes) {
      vectors.push_back(codes);
    };
  const mpz_class count = rcm::enumerate_regular(ring, args.n, opt);
  json payload = {{"count", count.get_str()}, {"det_one", args.det_one}};
  if (args.emit) payload["vectors"] = std::move(vectors);
  return payload;
}

int run_enumerate(const EnumerateArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  if (args.field.empty() == (args.mod == 0))
    throw std::invalid_argument("enumerate: give exactly one of --field or --mod");
  json params = {{"n", args.n},
                 {"budget", args.budget},
                 {"det_one", args.det_one},
                 {"emit", args.emit}};
  json payload;
  if (!args.field.empty()) {
    const auto [p, t] = parse_prime_power(args.field);
    params["field"] = args.field;
    const rcm::FiniteField ring(p, t);
    payload = enumerate_payload(ring, args);
  } else {
    params["mod"] = args.mod;
    const rcm::ZmodRing ring(args.mod);
    payload = enumerate_payload(ring, args);
  }
  print_envelope("enumerate", params, payload, elapsed_ms_since(start));
  return 0;
}

struct CanonicalArgs {
  std::string field;
  u32 n = 0;
  std::string column;
};

int run_canonical(const CanonicalArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  if (args.field.empty())
    throw std::invalid_argument("canonical: --field is required");
  const auto [p, t] = parse_prime_power(args.field);
  const std::vector<u64> codes = parse_u64_list(args.column, "--column");
  if (codes.size() != args.n)
    throw std::invalid_argument("canonical: --column needs exactly n entries");

  const rcm::StructureContext ctx(p, t, args.n);
  const rcm::FiniteField base(p, t);
  for (u64 code : codes)
    if (code >= base.q())
      throw std::invalid_argument("canonical: column code " +
                                  std::to_string(code) +
                                  " is not an element encoding of the field");
  const rcm::SubfieldEmbedding embed(base, ctx.field());
  std::vector<u32> column;
  for (u64 code : codes) column.push_back(embed(static_cast<u32>(code)));
  const rcm::Circulant<rcm::FiniteField> c(ctx.field(), std::move(column));

  const auto canon = rcm::canonical_form(ctx, c);
  const auto blocks = rcm::extract_block_vectors(ctx, canon);
  std::vector<u32> stacked;
  for (const auto& block : blocks)
    stacked.insert(stacked.end(), block.begin(), block.end());
  if (!rcm::check_admissible(ctx, stacked))
    throw std::logic_error("canonical: extracted blocks failed admissibility");

  const std::string ring_name =
      "gf(" + std::to_string(p) + "^" + std::to_string(ctx.s()) + ")";
  const json params = {{"field", args.field}, {"n", args.n}, {"column", codes}};
  const json payload = {{"s", ctx.s()},
                        {"field", rcm::field_to_json(ctx.field())},
                        {"mu", ctx.mu()},
                        {"sigma", rcm::cycles_to_json(ctx.sigma())},
                        {"blocks", blocks},
                        {"canonical", rcm::matrix_to_json(canon, ring_name)}};
  print_envelope("canonical", params, payload, elapsed_ms_since(start));
  return 0;
}

struct VerifyArgs {
  std::string suite;
  u64 budget = u64{1} << 24;
};

int run_verify(const VerifyArgs& args) {
  const auto results = rcm::verify_suite(args.suite, args.budget);
  for (const auto& r : results) {
    std::cout << r.name << ": " << rcm::status_name(r.status);
    if (r.status != rcm::Status::pass && !r.detail.empty())
      std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  }
  return rcm::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in groups of regular circulant matrices"};
  app.require_subcommand(1);

  OrderArgs order_args;
  auto* order_cmd =
      app.add_subcommand("order", "group order over F_{p^t} or Z/aZ");
  order_cmd->add_option("--field", order_args.field, "prime power p^t");
  order_cmd->add_option("--mod", order_args.mod, "composite modulus a");
  order_cmd->add_option("--n", order_args.n, "matrix size")->required();

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "order table over a grid");
  table_cmd->add_option("--p-list", table_args.p_list, "comma-separated primes")
      ->required();
  table_cmd->add_option("--t-max", table_args.t_max, "maximum extension degree");
  table_cmd->add_option("--n-max", table_args.n_max, "maximum matrix size")
      ->required();
  table_cmd->add_option("--format", table_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", table_args.out, "write the table to this path");

  EnumerateArgs enum_args;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "brute-force count of regular circulants");
  enum_cmd->add_option("--field", enum_args.field, "prime power p^t");
  enum_cmd->add_option("--mod", enum_args.mod, "composite modulus a");
  enum_cmd->add_option("--n", enum_args.n, "matrix size")->required();
  enum_cmd->add_option("--budget", enum_args.budget,
                       "maximum number of candidate vectors");
  enum_cmd->add_flag("--det-one", enum_args.det_one,
                     "count only determinant-one circulants");
  enum_cmd->add_flag("--emit", enum_args.emit,
                     "include the defining vectors in the payload");

  CanonicalArgs canon_args;
  auto* canon_cmd = app.add_subcommand(
      "canonical", "block-Toeplitz canonical data of a circulant");
  canon_cmd->add_option("--field", canon_args.field, "prime power p^t")
      ->required();
  canon_cmd->add_option("--n", canon_args.n, "matrix size")->required();
  canon_cmd
      ->add_option("--column", canon_args.column,
                   "defining vector, comma-separated element encodings")
      ->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd
      ->add_option("--suite", verify_args.suite,
                   "orders | zmod | cycles | pascal | structure | all")
      ->required();
  verify_cmd->add_option("--budget", verify_args.budget,
                         "search-space budget for exhaustive checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*order_cmd) return run_order(order_args);
    if (*table_cmd) return run_table(table_args);
    if (*enum_cmd) return run_enumerate(enum_args);
    if (*canon_cmd) return run_canonical(canon_args);
    if (*verify_cmd) return run_verify(verify_args);
    return 2;
  } catch (const rcm::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const rcm::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
