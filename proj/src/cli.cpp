#include "zdg/cli.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "zdg/error.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/report.hpp"

namespace zdg::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected an integer in '" + std::string(context) + "'", 0);
  }
  return v;
}

// [a, b] from "a..b" or a single integer.
std::pair<std::uint64_t, std::uint64_t> parse_interval(std::string_view s, std::string_view context) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_u64(s, context);
    return {v, v};
  }
  const auto a = parse_u64(s.substr(0, dots), context);
  const auto b = parse_u64(s.substr(dots + 2), context);
  if (a > b) throw InvalidArgument("empty range in '" + std::string(context) + "'");
  if (b - a > 1'000'000) throw CapExceeded("range '" + std::string(context) + "' is too long");
  return {a, b};
}

struct Caps {
  std::uint64_t elements = kDefaultElementCap;
  std::size_t vertices = kDefaultGraphCap;
};

struct Options {
  std::string ring;
  std::string range;
  std::string relation = "associate";
  std::string flavor = "both";
  std::string method = "both";
  std::string format;
  double tol = 1e-7;
  std::optional<std::uint64_t> max_elements;
  std::optional<std::size_t> max_vertices;
  unsigned threads = 0;
  bool timing = true;

  // counts
  std::string what;
  std::optional<long> n, m, r, d;
  std::optional<std::uint64_t> q;
  std::vector<unsigned> ranks;
  std::vector<std::uint64_t> qs;
  bool square_zero = false;

  // lift
  std::string matrix_file;
  std::size_t row = 0;
  std::size_t copies = 2;
  double lambda = 0.0;
  std::string vector_text;
};

Caps resolve_caps(const Options& o) {
  Caps caps;
  if (const char* env = std::getenv("ZDG_MAX_ELEMENTS"); env != nullptr && *env != '\0') {
    caps.elements = parse_u64(env, "ZDG_MAX_ELEMENTS");
  }
  if (o.max_elements) caps.elements = *o.max_elements;
  if (o.max_vertices) caps.vertices = *o.max_vertices;
  return caps;
}

std::vector<Flavor> flavors_of(const std::string& f) {
  if (f == "adjacency") return {Flavor::adjacency};
  if (f == "laplacian") return {Flavor::laplacian};
  return {Flavor::adjacency, Flavor::laplacian};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_classes(const Options& o, const Caps& caps, std::ostream& out) {
  const Ring ring(parse_ring_spec(o.ring));
  const auto g = build_zdg(ring, caps.elements, caps.vertices);
  const auto p = compute_partition(g, parse_relation(o.relation));
  if (o.format == "csv") {
    out << "representative,size,kind,members\n";
    for (const auto& c : p.classes) {
      std::string members;
      for (auto v : c.members) members += (members.empty() ? "" : " ") + ring.label(g.vertices[v]);
      out << csv_field(ring.label(g.vertices[c.representative()])) << ',' << c.size() << ',' << to_string(c.kind)
          << ',' << csv_field(members) << '\n';
    }
  } else {
    emit(out, partition_json(g, p));
  }
  return 0;
}

int cmd_graph(const Options& o, const Caps& caps, std::ostream& out) {
  const Ring ring(parse_ring_spec(o.ring));
  const auto g = build_zdg(ring, caps.elements, caps.vertices);
  if (o.format == "csv") {
    out << "u,v\n";
    for (std::size_t i = 0; i < g.order(); ++i)
      g.adjacency.for_each_in_row(i, [&](std::size_t j) {
        if (i < j) out << csv_field(ring.label(g.vertices[i])) << ',' << csv_field(ring.label(g.vertices[j])) << '\n';
      });
  } else {
    emit(out, graph_json(g));
  }
  return 0;
}

// Join decomposition of Γ(R). Falls back to the factorisation-only routes when
// the ring is too large to enumerate and the relation is ~.
JoinDecomposition join_route(const RingDescriptor& desc, Relation rel, const std::optional<ZeroDivisorGraph>& g) {
  if (g) return decompose(*g, compute_partition(*g, rel));
  if (rel != Relation::associate) {
    throw CapExceeded(desc.to_string() + " exceeds the enumeration caps; only the associate relation has a closed form");
  }
  if (desc.is_zn()) return decompose_zn(std::get<ZnSpec>(desc.kind()).n);
  if (desc.is_semisimple()) return decompose_semisimple(desc);
  throw CapExceeded(desc.to_string() + " exceeds the enumeration caps and has no closed-form route");
}

std::optional<ZeroDivisorGraph> try_graph(const RingDescriptor& desc, const Caps& caps, bool required) {
  try {
    return build_zdg(Ring(desc), caps.elements, caps.vertices);
  } catch (const CapExceeded&) {
    if (required) throw;
    return std::nullopt;
  }
}

int cmd_spectrum(const Options& o, const Caps& caps, std::ostream& out) {
  const auto desc = parse_ring_spec(o.ring);
  const auto rel = parse_relation(o.relation);
  const bool want_join = o.method != "brute";
  const bool want_brute = o.method != "join";
  const auto g = try_graph(desc, caps, want_brute);

  std::optional<JoinDecomposition> d;
  if (want_join) d = join_route(desc, rel, g);

  std::vector<SpectrumReport> reports;
  bool mismatch = false;
  for (auto f : flavors_of(o.flavor)) {
    std::optional<SpectrumMultiset> join, brute;
    if (want_join) join = assemble_spectrum(*d, f);
    if (want_brute) brute = brute_spectrum(*g, f, caps.vertices);
    std::optional<SpectrumComparison> cmp;
    if (join && brute) {
      cmp = multiset_equal(join->values, brute->values, o.tol);
      mismatch = mismatch || !cmp->matched;
    }
    if (join) reports.push_back({desc.to_string(), rel, "join", f, *join, cmp});
    if (brute) reports.push_back({desc.to_string(), rel, "brute", f, *brute, cmp});
  }

  if (o.format == "csv") {
    out << "ring,relation,method,flavor,index,value\n";
    for (const auto& r : reports)
      for (std::size_t i = 0; i < r.spectrum.values.size(); ++i)
        out << csv_field(r.ring) << ',' << to_string(r.relation) << ',' << r.method << ',' << to_string(r.flavor) << ','
            << i << ',' << format_sig(r.spectrum.values[i]) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(spectrum_json(r));
    emit(out, Json{{"reports", std::move(arr)}});
  }
  return mismatch ? 2 : 0;
}

// ---------------------------------------------------------------------------

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& what) {
  if (!v) throw InvalidArgument("--what " + what + " needs " + flag);
  return *v;
}

unsigned small_unsigned(long v, const char* flag) {
  if (v < 0 || v > 4096) throw InvalidArgument(std::string(flag) + " must lie in [0, 4096]");
  return static_cast<unsigned>(v);
}

std::uint64_t prime_power(std::uint64_t q) {
  if (!nt::as_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  return q;
}

int cmd_counts(const Options& o, std::ostream& out) {
  const std::string& w = o.what;
  Json inputs = Json::object();
  Json value;

  auto n_arg = [&] {
    const long n = need(o.n, "--n", w);
    inputs["n"] = n;
    return n;
  };
  auto r_arg = [&] {
    const long r = need(o.r, "--r", w);
    inputs["r"] = r;
    return r;
  };
  auto q_arg = [&](bool must_be_prime_power) {
    const auto q = need(o.q, "--q", w);
    if (q < 2) throw InvalidArgument("q must be at least 2");
    inputs["q"] = q;
    return must_be_prime_power ? prime_power(q) : q;
  };
  auto profile_arg = [&] {
    if (o.ring.empty()) throw InvalidArgument("--what " + w + " needs --ring");
    SemisimpleProfile p;
    p.factors = semisimple_factors(parse_ring_spec(o.ring));
    p.ranks = o.ranks;
    p.squares_to_zero = o.square_zero;
    p.validate();
    inputs["ring"] = o.ring;
    inputs["ranks"] = o.ranks;
    inputs["square_zero"] = o.square_zero;
    return p;
  };

  if (w == "qbinom") {
    const long n = n_arg(), r = r_arg();
    value = decimal(q_binomial(n, r, q_arg(false)));
  } else if (w == "rank-count") {
    const long n = n_arg();
    const long m = o.m.value_or(n);
    inputs["m"] = m;
    const long r = r_arg();
    value = decimal(rank_count(small_unsigned(n, "--n"), small_unsigned(m, "--m"), small_unsigned(r, "--r"), q_arg(true)));
  } else if (w == "class-size") {
    const long r = r_arg();
    if (r < 1) throw InvalidArgument("--r must be at least 1");
    value = decimal(class_size_matrix(small_unsigned(r, "--r"), q_arg(true)));
  } else if (w == "class-count" || w == "idempotents" || w == "nilpotent2") {
    const unsigned n = small_unsigned(n_arg(), "--n");
    if (n < 1 || (w == "class-count" && n < 2)) throw InvalidArgument("--n is too small for " + w);
    const auto q = q_arg(true);
    value = decimal(w == "class-count" ? class_count_matrix(n, q) : w == "idempotents" ? idempotent_count(n, q) : nilpotent2_count(n, q));
  } else if (w == "compressed-degree" || w == "matrix-degree") {
    const unsigned n = small_unsigned(n_arg(), "--n");
    const unsigned r = small_unsigned(r_arg(), "--r");
    if (r < 1 || r >= n) throw InvalidArgument("--r must satisfy 1 <= r <= n-1");
    const auto q = q_arg(true);
    if (w == "compressed-degree") {
      value = decimal(compressed_degree_matrix(n, q, r));
    } else {
      inputs["square_zero"] = o.square_zero;
      if (o.square_zero && 2 * r > n) throw InvalidArgument("a rank-r matrix with A^2 = 0 needs 2r <= n");
      value = decimal(degree_matring(n, q, r, o.square_zero));
    }
  } else if (w == "zn-degree") {
    const long n = n_arg();
    const long d = need(o.d, "--d", w);
    inputs["d"] = d;
    if (n < 2 || d <= 1 || d >= n || n % d != 0) throw InvalidArgument("--d must be a nontrivial divisor of --n");
    value = std::to_string(degree_zn(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)));
  } else if (w == "zn-profile") {
    const long n = n_arg();
    if (n < 2) throw InvalidArgument("--n must be at least 2");
    value = zn_profile_json(zn_profile(static_cast<std::uint64_t>(n)));
  } else if (w == "phi") {
    const long n = n_arg();
    if (n < 1) throw InvalidArgument("--n must be positive");
    value = std::to_string(nt::euler_phi(static_cast<std::uint64_t>(n)));
  } else if (w == "semisimple-class-size") {
    value = decimal(semisimple_class_size(profile_arg()));
  } else if (w == "semisimple-vertex-degree") {
    value = decimal(semisimple_vertex_degree(profile_arg()));
  } else if (w == "semisimple-class-degree") {
    value = decimal(semisimple_class_degree(profile_arg()));
  } else if (w == "boolean-skeleton") {
    if (o.qs.size() < 2) throw InvalidArgument("--what boolean-skeleton needs at least two field orders in --qs");
    inputs["qs"] = o.qs;
    value = boolean_skeleton_json(boolean_skeleton(o.qs));
  } else {
    throw InvalidArgument("unknown formula '" + w + "'");
  }

  if (o.format == "text") {
    out << (value.is_string() ? value.get<std::string>() : value.dump(2)) << '\n';
  } else {
    emit(out, count_json(w, std::move(inputs), std::move(value)));
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SweepRow {
  std::string flavor;
  std::string agreement;  // match | mismatch | skipped
  double max_dev = 0.0;
  double seconds = 0.0;
};

struct SweepEntry {
  std::string ring;
  std::optional<std::size_t> zero_divisors;
  std::vector<SweepRow> rows;
  std::string note;
};

SweepEntry verify_one(const std::string& spec, Relation rel, const Caps& caps, double tol) {
  SweepEntry e;
  e.ring = spec;
  const auto skip = [&](std::string why) {
    e.rows = {{"both", "skipped", 0.0, 0.0}};
    e.note = std::move(why);
    return e;
  };
  std::optional<ZeroDivisorGraph> g;
  try {
    const auto desc = parse_ring_spec(spec);
    e.ring = desc.to_string();
    g = build_zdg(Ring(desc), caps.elements, caps.vertices);
  } catch (const CapExceeded& ex) {
    return skip(ex.what());
  }
  e.zero_divisors = g->order();
  if (g->order() == 0) return skip("no zero-divisors");

  const auto t0 = std::chrono::steady_clock::now();
  std::optional<JoinDecomposition> d;
  std::string failure;
  try {
    d = decompose(*g, compute_partition(*g, rel));
  } catch (const VerificationError& ex) {
    failure = ex.what();
  }
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto f : {Flavor::adjacency, Flavor::laplacian}) {
    const auto t1 = std::chrono::steady_clock::now();
    SweepRow row{to_string(f), "mismatch", std::numeric_limits<double>::infinity(), 0.0};
    if (d) {
      const auto cmp = multiset_equal(assemble_spectrum(*d, f).values, brute_spectrum(*g, f, caps.vertices).values, tol);
      row.agreement = cmp.matched ? "match" : "mismatch";
      row.max_dev = cmp.max_deviation;
    }
    row.seconds = setup / 2 + std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    e.rows.push_back(row);
  }
  e.note = failure;
  return e;
}

int cmd_verify(const Options& o, const Caps& caps, std::ostream& out, std::ostream& err) {
  if (o.ring.empty() == o.range.empty()) throw InvalidArgument("verify needs exactly one of --ring or --range");
  const auto rel = parse_relation(o.relation);
  const auto specs = o.range.empty() ? std::vector<std::string>{o.ring} : expand_range(o.range);

  // Rings run in parallel; rows are written back in input order.
  std::vector<SweepEntry> results(specs.size());
  std::vector<std::string> errors(specs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1U, std::min<unsigned>(o.threads ? o.threads : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(specs.size())));
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        results[i] = verify_one(specs[i], rel, caps, o.tol);
      } catch (const Error& ex) {
        errors[i] = std::string(ex.kind()) + ": " + specs[i] + ": " + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& e : errors)
    if (!e.empty()) throw InvalidArgument(e);

  bool mismatch = false;
  for (const auto& e : results) {
    for (const auto& r : e.rows) mismatch = mismatch || r.agreement == "mismatch";
    if (!e.note.empty()) err << "note: " << e.ring << ": " << e.note << '\n';
  }

  if (o.format == "json") {
    Json rings = Json::array();
    for (const auto& e : results) {
      Json rows = Json::array();
      for (const auto& r : e.rows) {
        Json row = {{"flavor", r.flavor}, {"method_agreement", r.agreement}, {"max_deviation", r.max_dev}};
        if (o.timing) row["seconds"] = r.seconds;
        rows.push_back(std::move(row));
      }
      Json entry = {{"ring", e.ring}, {"zero_divisors", nullptr}, {"relation", o.relation}, {"rows", std::move(rows)}};
      if (e.zero_divisors) entry["zero_divisors"] = *e.zero_divisors;
      if (!e.note.empty()) entry["note"] = e.note;
      rings.push_back(std::move(entry));
    }
    Json doc = {{"all_matched", !mismatch}, {"rings", std::move(rings)}};
    if (o.range.empty() && results[0].zero_divisors) {
      doc["agreements"] = agreement_json(check_relation_agreements(Ring(parse_ring_spec(o.ring)), caps.elements));
    }
    emit(out, doc);
  } else {
    out << "ring,|Z|,flavor,method_agreement,max_dev,seconds\n";
    for (const auto& e : results)
      for (const auto& r : e.rows) {
        out << csv_field(e.ring) << ',' << (e.zero_divisors ? std::to_string(*e.zero_divisors) : "") << ',' << r.flavor
            << ',' << r.agreement << ',' << (r.agreement == "skipped" ? "" : format_sig(r.max_dev)) << ','
            << (o.timing ? format_sig(r.seconds, 4) : "") << '\n';
      }
  }
  return mismatch ? 2 : 0;
}

// ---------------------------------------------------------------------------

int cmd_lift(const Options& o, std::ostream& out) {
  std::string text;
  if (o.matrix_file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(o.matrix_file);
    if (!in) throw InvalidArgument("cannot read matrix file '" + o.matrix_file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const auto rows = parse_matrix_text(text);
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidArgument("matrix file is empty");
  DenseMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidArgument("matrix must be square; row " + std::to_string(i + 1) + " has " +
                                                   std::to_string(rows[i].size()) + " entries");
    for (std::size_t j = 0; j < n; ++j) b(i, j) = rows[i][j];
  }
  if (o.row < 1 || o.row > n) throw InvalidArgument("--row must lie in [1, " + std::to_string(n) + "]");

  std::string vec = o.vector_text;
  for (char& c : vec)
    if (c == ',') c = ' ';
  const auto parsed = parse_matrix_text(vec);
  if (parsed.size() != 1) throw InvalidArgument("--vector must be a single list of entries");

  const auto res = duplicate_lift(b, o.row - 1, o.copies, o.lambda, parsed[0]);
  if (res.status == LiftStatus::formula_inapplicable) throw InvalidArgument("formula inapplicable: " + res.message);
  emit(out, lift_json(res, o.row, o.copies, o.lambda));
  return res.status == LiftStatus::ok ? 0 : 2;
}

}  // namespace

// ---------------------------------------------------------------------------

double parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  auto parse_double = [&](std::string_view part) {
    part = trim(part);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw ParseError("malformed number '" + std::string(s) + "'", 0);
    }
    return v;
  };
  if (slash == std::string_view::npos) return parse_double(s);
  const double den = parse_double(s.substr(slash + 1));
  if (den == 0.0) throw InvalidArgument("zero denominator in '" + std::string(s) + "'");
  return parse_double(s.substr(0, slash)) / den;
}

std::vector<std::vector<double>> parse_matrix_text(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto b = line.find_first_not_of(" \t\r", pos);
      if (b == std::string_view::npos) break;
      const auto e = line.find_first_of(" \t\r", b);
      row.push_back(parse_rational(line.substr(b, e == std::string_view::npos ? line.size() - b : e - b)));
      pos = e == std::string_view::npos ? line.size() : e;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    start = end + 1;
  }
  return rows;
}

std::vector<std::string> expand_range(std::string_view spec) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(';', start);
    if (end == std::string_view::npos) end = spec.size();
    const auto item = trim(spec.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    if (item.rfind("Zn:", 0) == 0) {
      const auto [a, b] = parse_interval(item.substr(3), item);
      if (a < 2) throw InvalidArgument("Z_n needs n >= 2 in '" + std::string(item) + "'");
      for (auto n = a; n <= b; ++n) out.push_back("Zn(" + std::to_string(n) + ")");
    } else if (item.rfind("M:", 0) == 0) {
      const auto rest = item.substr(2);
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) throw ParseError("expected 'M:n,GF(q)' in '" + std::string(item) + "'", 2);
      const auto [a, b] = parse_interval(rest.substr(0, comma), item);
      const std::string field(trim(rest.substr(comma + 1)));
      for (auto n = a; n <= b; ++n) out.push_back("M(" + std::to_string(n) + "," + field + ")");
    } else {
      out.emplace_back(item);
    }
  }
  if (out.empty()) throw InvalidArgument("empty ring range");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor graphs of finite rings: classes, spectra and counting formulas", "zdg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--max-elements", o.max_elements, "Enumeration cap on |R| (also ZDG_MAX_ELEMENTS)");
  app.add_option("--max-vertices", o.max_vertices, "Cap on graph order for enumeration and eigensolves");

  const auto relation_opt = [&](CLI::App* sub) {
    sub->add_option("--relation", o.relation, "associate | neighborhood | annihilator")
        ->check(CLI::IsMember({"associate", "neighborhood", "annihilator"}));
  };
  const auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* classes = app.add_subcommand("classes", "Partition the nonzero zero-divisors");
  classes->add_option("--ring", o.ring, "Ring spec, e.g. \"Zn(18)\" or \"M(2,GF(3))\"")->required();
  relation_opt(classes);
  format_opt(classes, {"json", "csv"});

  auto* graph = app.add_subcommand("graph", "Vertices and edges of the zero-divisor graph");
  graph->add_option("--ring", o.ring, "Ring spec")->required();
  format_opt(graph, {"json", "csv"});

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency and Laplacian spectra");
  spectrum->add_option("--ring", o.ring, "Ring spec")->required();
  relation_opt(spectrum);
  spectrum->add_option("--flavor", o.flavor)->check(CLI::IsMember({"adjacency", "laplacian", "both"}));
  spectrum->add_option("--method", o.method)->check(CLI::IsMember({"join", "brute", "both"}));
  spectrum->add_option("--tol", o.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
  format_opt(spectrum, {"json", "csv"});

  auto* counts = app.add_subcommand("counts", "Evaluate a closed-form count");
  counts->add_option("--what", o.what, "Formula name")
      ->required()
      ->check(CLI::IsMember({"qbinom", "rank-count", "class-size", "class-count", "idempotents", "nilpotent2",
                             "compressed-degree", "matrix-degree", "zn-degree", "zn-profile", "phi",
                             "semisimple-class-size", "semisimple-vertex-degree", "semisimple-class-degree",
                             "boolean-skeleton"}));
  counts->add_option("--n", o.n);
  counts->add_option("--m", o.m);
  counts->add_option("--r", o.r);
  counts->add_option("--d", o.d);
  counts->add_option("--q", o.q);
  counts->add_option("--ring", o.ring, "Semisimple ring for the semisimple-* formulas");
  counts->add_option("--ranks", o.ranks, "Per-factor ranks, comma separated")->delimiter(',');
  counts->add_option("--qs", o.qs, "Field orders for boolean-skeleton, comma separated")->delimiter(',');
  counts->add_flag("--square-zero", o.square_zero, "The element squares to zero");
  format_opt(counts, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Compare join-assembled spectra with direct eigensolves");
  verify->add_option("--ring", o.ring, "Single ring spec");
  verify->add_option("--range", o.range, "Sweep list, e.g. \"Zn:6..200;M:2,GF(3)\"");
  relation_opt(verify);
  verify->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  verify->add_flag("!--no-timing", o.timing, "Leave the seconds column empty");
  format_opt(verify, {"json", "csv"});

  auto* lift = app.add_subcommand("lift", "Lift an eigenpair through row/column duplication");
  lift->add_option("--matrix", o.matrix_file, "File of whitespace-separated rationals, '-' for stdin")->required();
  lift->add_option("--row", o.row, "Row/column to duplicate, counted from 1")->required();
  lift->add_option("--m", o.copies, "Total copies of the row after duplication")->check(CLI::PositiveNumber);
  lift->add_option("--lambda", o.lambda, "Eigenvalue of the input matrix")->required();
  lift->add_option("--vector", o.vector_text, "Eigenvector entries, comma or space separated")->required();

  std::vector<std::string> argv_store{"zdg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: usage: " << e.what() << '\n';
    return 1;
  }
  // verify defaults to CSV, everything else to JSON.
  if (o.format.empty()) o.format = verify->parsed() ? "csv" : "json";

  try {
    const Caps caps = resolve_caps(o);
    if (classes->parsed()) return cmd_classes(o, caps, out);
    if (graph->parsed()) return cmd_graph(o, caps, out);
    if (spectrum->parsed()) return cmd_spectrum(o, caps, out);
    if (counts->parsed()) return cmd_counts(o, out);
    if (verify->parsed()) return cmd_verify(o, caps, out, err);
    if (lift->parsed()) return cmd_lift(o, out);
  } catch (const VerificationError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace zdg::cli
