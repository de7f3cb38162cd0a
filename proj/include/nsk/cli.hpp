#pragma once

#include "construction.hpp"
#include "koszul_check.hpp"
#include "sweep.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace nsk {

using Json = nlohmann::ordered_json;

/// Characteristic used when a ring description has no "@p" suffix:
/// NSKOSZUL_CHAR if set, else 32003.
inline std::uint32_t default_characteristic() {
  if (const char* env = std::getenv("NSKOSZUL_CHAR")) {
    char* end = nullptr;
    unsigned long p = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || !is_prime(p) || p >= (1ul << 31))
      throw ParseError("NSKOSZUL_CHAR is not a prime below 2^31", 0);
    return std::uint32_t(p);
  }
  return PrimeField::kDefaultCharacteristic;
}

/// Parses "name=weight,...[@p]", e.g. "x=1,y=3@32003".
inline RingSpec parse_ring_spec(const std::string& s) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what, std::size_t at) -> ParseError {
    return ParseError("ring spec: " + what, at);
  };
  auto number = [&](const char* what) {
    std::size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > (1ll << 32))
        throw fail(std::string(what) + " too large", start);
    }
    if (pos == start)
      throw fail(std::string("expected ") + what, start);
    return v;
  };
  std::vector<std::string> names;
  std::vector<int> weights;
  std::set<std::string> seen;
  while (true) {
    std::size_t start = pos;
    if (pos >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      throw fail("expected variable name", pos);
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (!seen.insert(name).second)
      throw fail("duplicate variable '" + name + "'", start);
    if (pos >= s.size() || s[pos] != '=')
      throw fail("expected '='", pos);
    ++pos;
    std::size_t wpos = pos;
    if (pos < s.size() && s[pos] == '-')
      throw fail("weight must be positive", wpos);
    long long w = number("weight");
    if (w < 1 || w > 1'000'000)
      throw fail("weight must be a positive integer", wpos);
    names.push_back(std::move(name));
    weights.push_back(int(w));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  std::uint32_t p = 0;
  if (pos < s.size() && s[pos] == '@') {
    ++pos;
    std::size_t ppos = pos;
    long long v = number("characteristic");
    if (v >= (1ll << 31) || !is_prime(std::uint64_t(v)))
      throw fail("characteristic " + std::to_string(v) + " is not a prime below 2^31",
                 ppos);
    p = std::uint32_t(v);
  } else {
    p = default_characteristic();
  }
  if (pos != s.size())
    throw fail("unexpected character '" + std::string(1, s[pos]) + "'", pos);
  return RingSpec(std::move(names), std::move(weights), p);
}

inline std::string render_ring_spec(const RingSpec& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.num_vars(); ++i)
    out += (i ? "," : "") + ring.name(i) + "=" + std::to_string(ring.weight(i));
  return out + "@" + std::to_string(ring.characteristic());
}

inline Json to_json(const RingSpec& ring) {
  return Json{{"names", ring.names()},
              {"weights", ring.weights()},
              {"char", ring.characteristic()}};
}

inline Json to_json(const BettiTable& b) {
  Json arr = Json::array();
  for (const auto& e : b.entries())
    arr.push_back(Json{{"i", e.i}, {"j", e.j}, {"rank", e.rank}});
  return arr;
}

inline Json to_json(Verdict v) {
  if (v == Verdict::inconclusive)
    return "inconclusive";
  return v == Verdict::holds;
}

inline Json to_json(const ConstructionTrace& t) {
  Json steps = Json::array();
  for (const ConstructionStep& s : t.steps)
    steps.push_back(Json{{"eliminated_var", s.eliminated_var},
                         {"layer", s.layer},
                         {"N", s.N},
                         {"sub_weights", s.sub_weights},
                         {"sub_threshold", s.sub_threshold},
                         {"sub_table", to_json(s.sub_table)},
                         {"after_tensor", to_json(s.after_tensor)},
                         {"running_before", to_json(s.running_before)},
                         {"after_horseshoe", to_json(s.after_horseshoe)}});
  Json j{{"weights", t.weights}, {"e", t.e}, {"base_case", t.base_case}};
  if (t.eliminated_var) {
    j["eliminated_var"] = *t.eliminated_var;
    j["d"] = t.d;
    j["N"] = t.N;
  }
  j["steps"] = std::move(steps);
  return j;
}

inline std::string trace_text(const ConstructionTrace& t, const RingSpec& ring) {
  std::ostringstream out;
  if (t.base_case) {
    out << "base case: free table {(0,0,1)}\n";
    return out.str();
  }
  out << "eliminate " << ring.name(*t.eliminated_var) << " (weight " << t.d
      << "), N = " << t.N << "\n";
  for (const ConstructionStep& s : t.steps) {
    out << "layer " << s.layer << ": Construct((";
    for (std::size_t k = 0; k < s.sub_weights.size(); ++k)
      out << (k ? "," : "") << s.sub_weights[k];
    out << ")," << s.sub_threshold << ") = " << s.sub_table.to_string() << "\n"
        << "  after Koszul tensor: " << s.after_tensor.to_string() << "\n"
        << "  after horseshoe with " << s.running_before.to_string() << ": "
        << s.after_horseshoe.to_string() << "\n";
  }
  return out.str();
}

enum class OutputFormat { text, json, csv };

struct JobSpec {
  std::string command;
  std::string ring;
  int e = 0;
  std::optional<int> bound;
  OutputFormat format = OutputFormat::text;
  bool trace = false;
  bool differentials = false;
  std::optional<int> layer;
  std::optional<std::string> emit_cas;
  SweepRange sweep;
  unsigned workers = 1;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitInconclusive = 2,
  kExitInputError = 3,
};

inline int exit_code(const std::vector<Verdict>& verdicts) {
  bool inconclusive = false;
  for (Verdict v : verdicts) {
    if (v == Verdict::fails)
      return kExitFailed;
    inconclusive |= v == Verdict::inconclusive;
  }
  return inconclusive ? kExitInconclusive : kExitOk;
}

/// Macaulay2 script computing the minimal resolution of the truncation.
inline std::string cas_script(const RingSpec& ring, const std::vector<Monomial>& gens) {
  std::ostringstream out;
  out << "kk = ZZ/" << ring.characteristic() << ";\n"
      << "S = kk[";
  for (std::size_t i = 0; i < ring.num_vars(); ++i)
    out << (i ? "," : "") << ring.name(i);
  out << ", Degrees => {";
  for (std::size_t i = 0; i < ring.num_vars(); ++i)
    out << (i ? "," : "") << ring.weight(i);
  out << "}];\nI = ideal(";
  for (std::size_t k = 0; k < gens.size(); ++k)
    out << (k ? ", " : "") << gens[k].to_string(ring.names());
  out << ");\nF = res module I;\nprint betti F;\n";
  return out.str();
}

namespace detail {

inline Json base_json(const RingSpec& ring, int e, int bound) {
  return Json{{"ring", to_json(ring)}, {"e", e}, {"bound", bound}};
}

inline void print_hilbert(std::ostream& out, const std::vector<std::int64_t>& h) {
  for (std::size_t d = 0; d < h.size(); ++d)
    out << (d ? " " : "") << h[d];
  out << "\n";
}

inline int run_checked(const JobSpec& job, std::ostream& out) {
  const bool json = job.format == OutputFormat::json;
  if (job.command == "sweep") {
    auto start = std::chrono::steady_clock::now();
    std::vector<SweepRow> rows = run_sweep(job.sweep, job.workers);
    std::vector<Verdict> all;
    for (const SweepRow& r : rows)
      all.insert(all.end(), {r.lin_acyclic, r.gr_linear, r.construction_match});
    if (job.format == OutputFormat::csv) {
      out << sweep_csv(rows);
    } else if (json) {
      Json arr = Json::array();
      for (const SweepRow& r : rows)
        arr.push_back(Json{{"weights", r.weights},
                           {"e", r.e},
                           {"bound", r.bound},
                           {"verdicts", Json{{"lin_acyclic", to_json(r.lin_acyclic)},
                                             {"gr_linear", to_json(r.gr_linear)},
                                             {"construction_match",
                                              to_json(r.construction_match)}}},
                           {"beta_totals", r.totals}});
      out << arr.dump(2) << "\n";
    } else {
      for (const SweepRow& r : rows) {
        out << "weights (";
        for (std::size_t t = 0; t < r.weights.size(); ++t)
          out << (t ? "," : "") << r.weights[t];
        out << ") e=" << r.e << " bound=" << r.bound
            << " lin_acyclic=" << to_string(r.lin_acyclic)
            << " gr_linear=" << to_string(r.gr_linear)
            << " construction_match=" << to_string(r.construction_match)
            << " totals=(";
        for (std::size_t t = 0; t < r.totals.size(); ++t)
          out << (t ? "," : "") << r.totals[t];
        out << ") " << r.seconds << "s\n";
      }
      double total = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      out << rows.size() << " cases, " << total << "s\n";
    }
    return exit_code(all);
  }

  RingSpec ring = parse_ring_spec(job.ring);
  const int e = job.e;
  const int bound = job.bound.value_or(default_bound(ring, e));
  if (bound < 0)
    throw RangeError("bound must be non-negative");
  const auto gens = trunc_gens(ring, e);

  if (job.command == "gens") {
    if (json) {
      Json j = base_json(ring, e, bound);
      Json arr = Json::array();
      for (const Monomial& m : gens)
        arr.push_back(Json{{"monomial", m.to_string(ring.names())},
                           {"degree", weighted_degree(m, ring)}});
      j["generators"] = std::move(arr);
      out << j.dump(2) << "\n";
    } else {
      for (const Monomial& m : gens)
        out << m.to_string(ring.names()) << " " << weighted_degree(m, ring) << "\n";
    }
    return kExitOk;
  }
  if (job.command == "resolve") {
    GradedFreeComplex F = resolve_monomial_ideal(ring, gens);
    if (job.emit_cas) {
      std::ofstream script(*job.emit_cas);
      if (!script)
        throw Error("cannot write " + *job.emit_cas);
      script << cas_script(ring, gens);
    }
    if (json) {
      Json j = base_json(ring, e, bound);
      j["betti"] = to_json(F.betti_table());
      out << j.dump(2) << "\n";
    } else {
      out << F.betti_table().to_grid();
      if (job.differentials)
        out << F.to_string();
    }
    return kExitOk;
  }
  if (job.command == "gr-betti" || job.command == "gr-hilbert") {
    OrdContext ctx = OrdContext::ideal(ring, gens);
    if (job.command == "gr-hilbert") {
      auto h = gr_hilbert(ctx, bound);
      if (json) {
        Json j = base_json(ring, e, bound);
        j["hilbert"] = h;
        out << j.dump(2) << "\n";
      } else {
        print_hilbert(out, h);
      }
      return kExitOk;
    }
    BettiTable b = gr_betti(ctx, bound);
    if (json) {
      Json j = base_json(ring, e, bound);
      j["betti"] = to_json(b);
      out << j.dump(2) << "\n";
    } else {
      out << b.to_grid();
    }
    return kExitOk;
  }
  if (job.command == "lin-check") {
    GradedFreeComplex L = linear_part(resolve_monomial_ideal(ring, gens));
    LinAcyclicity la = lin_acyclicity(L, bound);
    Verdict v = !la.acyclic ? Verdict::fails
                            : (la.conclusive ? Verdict::holds : Verdict::inconclusive);
    if (json) {
      Json j = base_json(ring, e, bound);
      j["betti"] = to_json(L.betti_table());
      j["verdicts"] = Json{{"lin_acyclic", to_json(v)}};
      out << j.dump(2) << "\n";
    } else {
      out << L.to_string() << "lin_acyclic: " << to_string(v) << "\n";
    }
    return exit_code({v});
  }
  if (job.command == "construct") {
    auto [b, trace] = construct_gr_betti(ring.weights(), e);
    if (json) {
      Json j = base_json(ring, e, bound);
      j["betti"] = to_json(b);
      if (job.trace)
        j["trace"] = to_json(trace);
      out << j.dump(2) << "\n";
    } else {
      if (job.trace)
        out << trace_text(trace, ring);
      out << b.to_string() << "\n";
    }
    return kExitOk;
  }
  if (job.command == "koszul") {
    KoszulReport rep = koszul_verdict(ring, e, bound);
    if (json) {
      Json j = base_json(ring, e, bound);
      j["betti"] = to_json(rep.gr_betti);
      j["verdicts"] = Json{{"lin_acyclic", to_json(rep.lin_acyclic)},
                           {"gr_linear", to_json(rep.gr_linear)},
                           {"construction_match", to_json(rep.construction_match)}};
      if (job.trace)
        j["trace"] = to_json(rep.trace);
      out << j.dump(2) << "\n";
    } else {
      out << "ring " << render_ring_spec(ring) << ", e = " << e
          << ", bound = " << bound << "\n"
          << "weighted Betti:\n" << rep.weighted_betti.to_grid()
          << "gr Betti:\n" << rep.gr_betti.to_grid()
          << "constructed: " << rep.constructed.to_string() << "\n"
          << "lin_acyclic: " << to_string(rep.lin_acyclic) << "\n"
          << "gr_linear: " << to_string(rep.gr_linear) << "\n"
          << "construction_match: " << to_string(rep.construction_match) << "\n";
      for (const std::string& note : rep.notes)
        out << "note: " << note << "\n";
      if (job.trace)
        out << trace_text(rep.trace, ring);
    }
    return exit_code({rep.lin_acyclic, rep.gr_linear, rep.construction_match});
  }
  if (job.command == "ses-check") {
    const std::size_t y = elimination_variable(ring);
    const int N = principal_layer(e, ring.weight(y));
    std::vector<int> layers;
    if (job.layer)
      layers.push_back(*job.layer);
    else
      for (int i = 0; i < N; ++i)
        layers.push_back(i);
    std::vector<Verdict> verdicts;
    Json arr = Json::array();
    for (int i : layers) {
      SesHilbert s = ses_hilbert(ring.weights(), e, i, bound);
      verdicts.push_back(s.additive() ? Verdict::holds : Verdict::fails);
      if (json)
        arr.push_back(Json{{"layer", i},
                           {"layer_hilbert", s.layer},
                           {"next_hilbert", s.next},
                           {"quotient_hilbert", s.quotient},
                           {"additive", s.additive()}});
      else
        out << "layer " << i << ": " << (s.additive() ? "additive" : "NOT additive")
            << "\n";
    }
    if (json) {
      Json j = base_json(ring, e, bound);
      j["layers"] = std::move(arr);
      out << j.dump(2) << "\n";
    }
    return exit_code(verdicts);
  }
  throw Error("unknown command '" + job.command + "'");
}

} // namespace detail

/// Runs one job, writing the report to `out` and diagnostics to `err`.
/// Exit status: 0 every verdict holds, 1 some verdict fails, 2 some verdict
/// is inconclusive at the bound, 3 invalid input.
inline int run_command(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    return detail::run_checked(job, out);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
}

} // namespace nsk
