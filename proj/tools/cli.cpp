// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dmw/delta.hpp"
#include "dmw/graph.hpp"
#include "dmw/io.hpp"
#include "dmw/matroid.hpp"
#include "dmw/parallel.hpp"
#include "dmw/search.hpp"

namespace dmw::cli {

namespace {

struct Outcome {
  int code = kHolds;
  Json payload;
  std::string text;
};

struct Options {
  std::string format;
  bool timing = false;

  std::string kind;
  std::string file;
  std::string upper_file;
  std::string lower_file;
  bool construct = false;
  std::string out_file;
  bool corpus = false;
  std::string property;
  std::string target;
  int n = 4;
};

std::string verdict(bool ok) { return ok ? "holds" : "FAILS"; }

std::string matroid_text(const char* name, const Matroid& m) {
  std::ostringstream os;
  os << name << ": rank " << m.rank() << ", " << m.bases().size() << " bases:";
  for (Subset b : m.bases()) os << ' ' << m.ground().format(b);
  return os.str();
}

Outcome cmd_check(const Options& o) {
  const Json j = read_json_file(o.file);
  Outcome out;
  out.payload = Json::object();
  out.payload["kind"] = o.kind;
  if (o.kind == "matroid") {
    const SetFamily family = family_from_json(j, "bases");
    auto result = check_basis_axiom(family);
    if (auto* v = std::get_if<ExchangeViolation>(&result)) {
      out.code = kFails;
      out.payload["valid"] = false;
      out.payload["violation"] = violation_to_json(family.ground(), *v);
      out.text = "not a matroid: " + describe(family.ground(), *v);
    } else {
      const auto& m = std::get<Matroid>(result);
      out.payload["valid"] = true;
      out.payload["rank"] = m.rank();
      out.payload["matroid"] = matroid_to_json(m);
      out.text = "matroid, " + matroid_text("bases", m);
    }
  } else {
    const SetFamily family = family_from_json(j, "feasibles");
    auto result = check_symmetric_exchange(family);
    if (auto* v = std::get_if<ExchangeViolation>(&result)) {
      out.code = kFails;
      out.payload["valid"] = false;
      out.payload["violation"] = violation_to_json(family.ground(), *v);
      out.text = "not a delta-matroid: " + describe(family.ground(), *v);
    } else {
      const auto& d = std::get<DeltaMatroid>(result);
      out.payload["valid"] = true;
      out.payload["delta"] = delta_to_json(d);
      out.text = "delta-matroid with " + std::to_string(d.feasibles().size()) +
                 " feasible sets";
    }
  }
  return out;
}

Outcome cmd_upper_lower(const Options& o) {
  const SetFamily family = family_from_json(read_json_file(o.file), "feasibles");
  auto result = check_symmetric_exchange(family);
  Outcome out;
  out.payload = Json::object();
  if (auto* v = std::get_if<ExchangeViolation>(&result)) {
    out.code = kFails;
    out.payload["valid"] = false;
    out.payload["violation"] = violation_to_json(family.ground(), *v);
    out.text = "not a delta-matroid: " + describe(family.ground(), *v);
    return out;
  }
  const auto& d = std::get<DeltaMatroid>(result);
  out.payload["upper"] = matroid_to_json(d.upper());
  out.payload["lower"] = matroid_to_json(d.lower());
  out.text = matroid_text("upper", d.upper()) + "\n" + matroid_text("lower", d.lower());
  return out;
}

Outcome cmd_pair(const Options& o) {
  const Matroid upper = matroid_from_json(read_json_file(o.upper_file));
  const Matroid lower = matroid_from_json(read_json_file(o.lower_file));
  const PairabilityReport report = is_pairable(upper, lower);
  Outcome out;
  out.code = report.pairable ? kHolds : kFails;
  out.payload = pairability_to_json(upper.ground(), report);
  out.payload["basis_conditions"] = basis_conditions_hold(upper, lower);
  out.text = report.pairable
                 ? "pairable: every upper circuit is a union of lower circuits"
                 : "not pairable: upper circuit " +
                       upper.ground().format(*report.offending_circuit) +
                       " is not a union of lower circuits";
  if (o.construct && report.pairable) {
    const DeltaMatroid d = certify_delta(construct_sandwich(upper, lower));
    if (!(d.upper() == upper) || !(d.lower() == lower)) {
      throw std::logic_error("sandwich family does not reproduce the pair");
    }
    const Json dj = delta_to_json(d);
    out.payload["sandwich"] = dj;
    out.text += "\nsandwich delta-matroid: " + std::to_string(d.feasibles().size()) +
                " feasible sets";
    if (!o.out_file.empty()) {
      std::ofstream file(o.out_file);
      if (!file) throw InputError("cannot write '" + o.out_file + "'");
      file << dump(dj);
      out.text += " (written to " + o.out_file + ")";
    }
  }
  return out;
}

Json cone_json(const std::string& name, const ConeQuotientReport& r) {
  Json j = Json::object();
  j["graph"] = name;
  j["deletion_identity"] = r.deletion_identity;
  j["contraction_identity"] = r.contraction_identity;
  return j;
}

Outcome cmd_cone_check(const Options& o) {
  Outcome out;
  std::vector<std::pair<std::string, Multigraph>> graphs;
  if (o.corpus) {
    graphs = rigidity_corpus();
  } else {
    if (o.file.empty()) throw InputError("cone-check needs a graph file or --corpus");
    graphs.emplace_back(o.file, graph_from_json(read_json_file(o.file)));
  }
  Json results = Json::array();
  bool all = true;
  for (const auto& [name, g] : graphs) {
    const auto r = verify_cone_quotient(g);
    all = all && r.holds();
    results.push_back(cone_json(name, r));
    out.text += name + ": deletion " + verdict(r.deletion_identity) +
                ", contraction " + verdict(r.contraction_identity) + "\n";
  }
  if (o.corpus) {
    out.payload = Json::object();
    out.payload["holds"] = all;
    out.payload["graphs"] = std::move(results);
  } else {
    out.payload = results[0];
  }
  if (!out.text.empty()) out.text.pop_back();
  out.code = all ? kHolds : kFails;
  return out;
}

std::string report_text(const SearchReport& r, bool timing) {
  std::ostringstream os;
  os << r.property_id << ": " << (r.holds ? "holds" : "does not hold") << " ("
     << r.universe_size << " structures";
  if (timing) {
    os << ", " << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms";
  }
  os << ")";
  if (!r.summary.is_null()) os << "\nsummary: " << r.summary.dump();
  for (const auto& w : r.witnesses) os << "\nwitness: " << w.dump();
  return os.str();
}

Outcome from_report(const SearchReport& r, bool timing) {
  return Outcome{r.holds ? kHolds : kFails, report_to_json(r, timing),
                 report_text(r, timing)};
}

Outcome cmd_verify(const Options& o) {
  return from_report(verify_property(o.property, o.n, default_workers()), o.timing);
}

Outcome cmd_search(const Options& o) {
  const unsigned workers = default_workers();
  if (o.target == "unpairable") return from_report(find_unpairable_pair(o.n, workers), o.timing);
  if (o.target == "verbatim-minors") {
    return from_report(study_verbatim_minors(o.n, workers), o.timing);
  }
  if (o.target == "restriction-readings") {
    return from_report(study_restriction_readings(o.n, workers), o.timing);
  }
  throw InputError("unknown search target '" + o.target + "'");
}

Outcome cmd_enumerate(const Options& o) {
  const unsigned workers = default_workers();
  Json items = Json::array();
  if (o.kind == "matroids") {
    for (const auto& m : enumerate_matroids(o.n, workers)) items.push_back(matroid_to_json(m));
  } else {
    for (const auto& d : enumerate_delta_matroids(o.n, workers)) {
      items.push_back(delta_to_json(d));
    }
  }
  Outcome out;
  out.payload = Json::object();
  out.payload["kind"] = o.kind;
  out.payload["n"] = o.n;
  out.payload["count"] = items.size();
  out.text = std::to_string(items.size()) +
             (o.kind == "matroids" ? " matroids" : " delta-matroids") + " on " +
             std::to_string(o.n) + " elements";
  out.payload["items"] = std::move(items);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool terminal) {
  CLI::App app{"Matroid and delta-matroid workbench", "dmw"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format (default: text on a terminal, json otherwise)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "Include elapsed time in search reports");

  auto* check = app.add_subcommand("check", "Certify a matroid or delta-matroid file");
  check->add_option("kind", o.kind)->required()->check(CLI::IsMember({"matroid", "delta"}));
  check->add_option("file", o.file)->required();

  auto* upper_lower =
      app.add_subcommand("upper-lower", "Upper and lower matroids of a delta-matroid");
  upper_lower->add_option("file", o.file)->required();

  auto* pair = app.add_subcommand("pair", "Test whether two matroids are pairable");
  pair->add_option("upper", o.upper_file)->required();
  pair->add_option("lower", o.lower_file)->required();
  pair->add_flag("--construct", o.construct, "Build the sandwich delta-matroid");
  pair->add_option("--out", o.out_file, "Write the sandwich delta-matroid here");

  auto* cone_check =
      app.add_subcommand("cone-check", "Check the cone deletion/contraction identities");
  cone_check->add_option("graph", o.file);
  cone_check->add_flag("--corpus", o.corpus, "Run on the built-in graph corpus");

  auto* verify = app.add_subcommand("verify", "Exhaustively verify a registered property");
  verify->add_option("property", o.property)->required();
  verify->add_option("--n", o.n, "Ground set size")->check(CLI::Range(0, 16));

  auto* search = app.add_subcommand("search", "Run a search or study");
  search->add_option("target", o.target, "unpairable | verbatim-minors | restriction-readings")
      ->required();
  search->add_option("--n", o.n, "Ground set size")->check(CLI::Range(0, 16));

  auto* enumerate = app.add_subcommand("enumerate", "List all small matroids or delta-matroids");
  enumerate->add_option("kind", o.kind)->required()->check(CLI::IsMember({"matroids", "delta"}));
  enumerate->add_option("--n", o.n, "Ground set size")->check(CLI::Range(0, 16));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "dmw: " << e.what() << "\n";
    return kUsage;
  }

  const bool json = o.format.empty() ? !terminal : o.format == "json";
  Outcome result;
  try {
    if (check->parsed()) {
      result = cmd_check(o);
    } else if (upper_lower->parsed()) {
      result = cmd_upper_lower(o);
    } else if (pair->parsed()) {
      result = cmd_pair(o);
    } else if (cone_check->parsed()) {
      result = cmd_cone_check(o);
    } else if (verify->parsed()) {
      result = cmd_verify(o);
    } else if (search->parsed()) {
      result = cmd_search(o);
    } else {
      result = cmd_enumerate(o);
    }
  } catch (const InputError& e) {
    err << "dmw: " << e.what() << "\n";
    return kUsage;
  } catch (const CertificationError& e) {
    // An input file that should hold a matroid or delta-matroid does not.
    err << "dmw: " << e.what() << "\n";
    Json payload = Json::object();
    payload["valid"] = false;
    payload["error"] = e.what();
    if (json) out << dump(payload);
    return kFails;
  }

  if (json) {
    out << dump(result.payload);
  } else {
    out << result.text << "\n";
  }
  return result.code;
}

}  // namespace dmw::cli
