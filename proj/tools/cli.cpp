#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "denum/denumerant.hpp"
#include "denum/errors.hpp"
#include "denum/families.hpp"
#include "denum/floor_sums.hpp"
#include "denum/kernels.hpp"
#include "denum/lshape.hpp"
#include "denum/semigroup.hpp"
#include "denum/sweep.hpp"

namespace denum::cli {

namespace {

using nlohmann::json;

std::vector<Integer> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Integer::from_string(item));
  if (out.size() != expected) {
    throw ParseError(std::string(what) + " expects " + std::to_string(expected) +
                     " comma-separated integers, got '" + text + "'");
  }
  return out;
}

GeneratorTriple parse_gens(const std::string& text) {
  auto g = parse_list(text, 3, "--gens");
  return GeneratorTriple::from_unsorted(g[0], g[1], g[2]);
}

// Pairwise-coprime generators only.
Semigroup3 parse_semigroup(const std::string& text) {
  const GeneratorTriple g = parse_gens(text);
  return Semigroup3::make(g.n1, g.n2, g.n3);
}

LShapePreference parse_pref(const std::string& text) {
  if (text == "h1") return LShapePreference::kH1;
  if (text == "h2") return LShapePreference::kH2;
  throw ParseError("--lshape-pref expects h1 or h2, got '" + text + "'");
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::string lo = text, hi = text;
  if (dots != std::string::npos) {
    lo = text.substr(0, dots);
    hi = text.substr(dots + 2);
  }
  const auto l = Integer::from_string(lo).to_int64();
  const auto h = Integer::from_string(hi).to_int64();
  if (!l || !h || *l < 1 || *h < *l || *h > 100000) {
    throw ParseError("--k-range expects lo..hi with 1 <= lo <= hi, got '" + text + "'");
  }
  return {static_cast<unsigned>(*l), static_cast<unsigned>(*h)};
}

json opt_int(const std::optional<Integer>& x) { return x ? json(x->to_string()) : json(nullptr); }

json trace_json(const CaseTrace& tr) {
  json j;
  j["path"] = to_string(tr.path);
  j["case_id"] = tr.case_id ? json(to_string(*tr.case_id)) : json(nullptr);
  j["label"] = tr.label();
  j["reduced_target"] = tr.reduced_target.to_string();
  j["ehrhart_correction"] = tr.ehrhart_correction.to_string();
  j["lshape"] = tr.lshape ? json(tr.lshape->to_string()) : json(nullptr);
  if (tr.basic) {
    j["basic"] = {tr.basic->x0.to_string(), tr.basic->y0.to_string(), tr.basic->z0.to_string()};
  }
  if (tr.case_id) {
    j["A_m"] = tr.A_m.to_string();
    j["k0"] = opt_int(tr.k0);
    j["k1"] = opt_int(tr.k1);
    j["A"] = opt_int(tr.A_part);
    j["B"] = opt_int(tr.B_part);
    json q = json::array();
    for (const auto& s : tr.sum_queries) q.push_back(s.to_string());
    j["sum_queries"] = q;
  }
  return j;
}

std::string lshape_line(const LShape& L) {
  return L.to_string() + " delta=" + L.delta.to_string() + " theta=" + L.theta.to_string();
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "family,k,m,d,elapsed_ns,case_id\n";
  for (const auto& r : records) {
    os << r.family << ',' << r.k << ',' << r.m << ',' << r.d << ',' << r.elapsed_ns << ','
       << r.case_id << '\n';
  }
}

json bench_json(const std::vector<BenchRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    arr.push_back({{"family", r.family},
                   {"k", r.k},
                   {"gens", {r.gens.n1.to_string(), r.gens.n2.to_string(), r.gens.n3.to_string()}},
                   {"m", r.m.to_string()},
                   {"d", r.d.to_string()},
                   {"elapsed_ns", r.elapsed_ns},
                   {"case_id", r.case_id}});
  }
  return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Denumerants of three-generated numerical semigroups", "denumctl"};
  app.require_subcommand(1);

  std::string gens, m_text, pref_text = "h1", sign_text, s_text, t_text, q_text, n_text;
  std::string family_text, range_text, csv_path;
  bool as_json = false;
  std::int64_t max_c = 40;
  double budget = 60.0;
  int repeats = 1;

  auto* den = app.add_subcommand("denumerant", "d(m; a, b, c) for any positive generators");
  den->add_option("--gens", gens, "a,b,c")->required();
  den->add_option("--m", m_text, "target")->required();
  den->add_option("--lshape-pref", pref_text, "h1 or h2");
  den->add_flag("--json", as_json, "print the value with its trace");

  auto* fac = app.add_subcommand("factorizations", "list F(m, T) for a pairwise-coprime triple");
  fac->add_option("--gens", gens, "a,b,c")->required();
  fac->add_option("--m", m_text, "target")->required();
  fac->add_flag("--json", as_json);

  auto* lsh = app.add_subcommand("lshape", "related L-shapes of a pairwise-coprime triple");
  lsh->add_option("--gens", gens, "a,b,c")->required();
  lsh->add_flag("--json", as_json);

  auto* ap = app.add_subcommand("apery", "Apery set, ordered by residue");
  ap->add_option("--gens", gens, "a,b,c")->required();
  ap->add_option("--m", m_text, "modulus (an element of T; default c)");
  ap->add_flag("--json", as_json);

  auto* sums = app.add_subcommand("sums", "S+(s,t,q,N) or S-(s,t,q,N)");
  sums->add_option("--sign", sign_text, "plus or minus")->required();
  sums->add_option("--s", s_text)->required();
  sums->add_option("--t", t_text)->required();
  sums->add_option("--q", q_text)->required();
  sums->add_option("--N", n_text)->required();
  sums->add_flag("--json", as_json);

  auto* ver = app.add_subcommand("verify", "exhaustive oracle sweep");
  ver->add_option("--max-c", max_c, "largest generator")->check(CLI::Range(3, 200));
  ver->add_flag("--json", as_json);

  auto* ben = app.add_subcommand("bench", "benchmark families T1..T6 at m_k = P - S - k");
  ben->add_option("--family", family_text, "T1..T6")->required();
  ben->add_option("--k-range", range_text, "lo..hi")->required();
  ben->add_option("--csv", csv_path, "write CSV here instead of stdout");
  ben->add_option("--lshape-pref", pref_text, "h1 or h2");
  ben->add_option("--budget", budget, "seconds before the run stops")->check(CLI::PositiveNumber);
  ben->add_option("--repeats", repeats, "timed repetitions per record")->check(CLI::Range(1, 1000));
  ben->add_flag("--json", as_json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (den->parsed()) {
      const FullResult r =
          denumerant_full(parse_gens(gens), Integer::from_string(m_text), parse_pref(pref_text));
      if (as_json) {
        json j{{"gens", gens}, {"m", m_text}, {"d", r.value.to_string()}, {"trace", trace_json(r.trace)}};
        if (r.certificate.reduced) j["reduced"] = r.certificate.reduced->to_string();
        out << j.dump(2) << "\n";
      } else {
        out << r.value << "\n";
      }
    } else if (fac->parsed()) {
      const Semigroup3 T = parse_semigroup(gens);
      const auto list = enumerate_factorizations(Integer::from_string(m_text), T);
      if (as_json) {
        json arr = json::array();
        for (const auto& f : list) arr.push_back({f.x.to_string(), f.y.to_string(), f.z.to_string()});
        out << arr.dump() << "\n";
      } else {
        for (const auto& f : list) out << f.x << ' ' << f.y << ' ' << f.z << "\n";
      }
    } else if (lsh->parsed()) {
      const Semigroup3 T = parse_semigroup(gens);
      const auto shapes = compute_lshapes(T);
      if (as_json) {
        json arr = json::array();
        for (const auto& L : shapes) {
          arr.push_back({{"l", L.l.to_string()}, {"h", L.h.to_string()}, {"w", L.w.to_string()},
                         {"y", L.y.to_string()}, {"delta", L.delta.to_string()},
                         {"theta", L.theta.to_string()}});
        }
        out << arr.dump() << "\n";
      } else {
        for (const auto& L : shapes) out << lshape_line(L) << "\n";
      }
    } else if (ap->parsed()) {
      const Semigroup3 T = parse_semigroup(gens);
      const Integer m0 = m_text.empty() ? T.c() : Integer::from_string(m_text);
      const auto set = apery_set(m0, T);
      if (as_json) {
        json arr = json::array();
        for (const auto& x : set) arr.push_back(x.to_string());
        out << arr.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
        out << "\n";
      }
    } else if (sums->parsed()) {
      if (sign_text != "plus" && sign_text != "minus") {
        throw ParseError("--sign expects plus or minus, got '" + sign_text + "'");
      }
      const FloorSumQuery q{sign_text == "plus" ? Sign::kPlus : Sign::kMinus,
                            Integer::from_string(s_text), Integer::from_string(t_text),
                            Integer::from_string(q_text), Integer::from_string(n_text)};
      const SumEvaluation ev = s_sum_traced(q);
      if (as_json) {
        out << json{{"query", q.to_string()}, {"value", ev.value.to_string()},
                    {"branch", to_string(ev.branch)}}.dump()
            << "\n";
      } else {
        out << ev.value << "\n";
      }
    } else if (ver->parsed()) {
      SweepOptions opts;
      opts.max_c = max_c;
      const SweepReport rep = run_sweep(opts);
      if (as_json) {
        json cases;
        for (int i = 0; i < kCaseIdCount; ++i) {
          cases[to_string(static_cast<CaseId>(i))] = rep.case_counts[static_cast<std::size_t>(i)];
        }
        out << json{{"triples", rep.triples}, {"evaluations", rep.evaluations},
                    {"mismatches", rep.mismatch_count}, {"cases", cases},
                    {"examples", rep.mismatches}}.dump(2)
            << "\n";
      } else {
        out << "triples " << rep.triples << ", evaluations " << rep.evaluations << ", enumerations "
            << rep.enumerations << ", mismatches " << rep.mismatch_count << "\n";
        for (int i = 0; i < kCaseIdCount; ++i) {
          out << "  " << to_string(static_cast<CaseId>(i)) << " "
              << rep.case_counts[static_cast<std::size_t>(i)] << "\n";
        }
        for (const auto& line : rep.mismatches) out << "mismatch: " << line << "\n";
      }
      return rep.ok() ? kOk : kMismatch;
    } else if (ben->parsed()) {
      const Family fam = parse_family(family_text);
      const auto [lo, hi] = parse_range(range_text);
      BenchOptions opts;
      opts.pref = parse_pref(pref_text);
      opts.budget_seconds = budget;
      opts.repeats = repeats;
      const BenchReport rep = run_bench(fam, lo, hi, opts);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw ResourceError("cannot open " + csv_path + " for writing");
        write_csv(f, rep.records);
      }
      if (as_json) {
        out << bench_json(rep.records).dump(2) << "\n";
      } else if (csv_path.empty()) {
        write_csv(out, rep.records);
      }
      if (rep.warning) err << "warning: " << *rep.warning << "\n";
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace denum::cli
