// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run all seven criteria
//   acceptance 1 3        run the listed criteria only
//
// Exit status is 0 iff every criterion that ran passed.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "groth/bijections.hpp"
#include "groth/json_io.hpp"
#include "groth/verify.hpp"
#include "support.hpp"

using namespace groth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// ------------------------------------------------------------ criterion 1

struct ItemLog {
  std::vector<std::string> failed;
  int total = 0;

  void check(const std::string& name, bool ok, const std::string& why = "") {
    ++total;
    std::cout << "  " << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !why.empty()) std::cout << ": " << why;
    std::cout << "\n";
    if (!ok) failed.push_back(name);
  }
};

WeightVector weight_from(const json& j) { return WeightVector(j.get<std::vector<int>>()); }

void check_weight(ItemLog& log, const std::string& name, const WeightVector& got, const json& want) {
  WeightVector w = weight_from(want);
  log.check(name, got == w, "fixture " + w.to_string() + ", computed " + got.to_string());
}

std::vector<std::pair<Tableau, std::pair<int, int>>> panels(const json& fixture) {
  std::vector<std::pair<Tableau, std::pair<int, int>>> out;
  for (const auto& p : fixture.at("trace")) {
    std::pair<int, int> mark{0, 0};
    if (p.contains("mark")) mark = {p["mark"][0].get<int>(), p["mark"][1].get<int>()};
    out.emplace_back(parse_diagram(p.at("diagram").get<std::string>()), mark);
  }
  return out;
}

bool trace_matches(const Trace& tr, const json& fixture, bool with_marks, std::string& why) {
  auto want = panels(fixture);
  if (tr.size() != want.size()) {
    why = std::to_string(tr.size()) + " panels, fixture has " + std::to_string(want.size());
    return false;
  }
  for (std::size_t k = 0; k < tr.size(); ++k) {
    if (!(tr[k].tableau == want[k].first)) {
      why = "panel " + std::to_string(k + 1) + " is " + diagram(tr[k].tableau);
      return false;
    }
    if (with_marks && std::pair{tr[k].mark_row, tr[k].mark_col} != want[k].second) {
      why = "panel " + std::to_string(k + 1) + " marks the wrong cell";
      return false;
    }
  }
  return true;
}

// Sizes of the runs of consecutive diagonals holding i or j', lowest first.
std::vector<int> component_sizes(const Tableau& t, Letter i, Letter jp) {
  std::set<int> diags;
  const auto& sh = t.shape();
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      auto a = t.letter(r, c);
      if (a && (*a == i || *a == jp)) diags.insert(c - r);
    }
  std::vector<int> sizes;
  int last = 0;
  for (int d : diags) {
    if (sizes.empty() || d != last + 1) sizes.push_back(0);
    ++sizes.back();
    last = d;
  }
  return sizes;
}

Outcome criterion1() {
  ItemLog log;
  const std::vector<std::string> names{"weights_ot_ut.json", "weights_flagged.json", "rsk_example.json",
                                       "jdt_example.json",   "swap_example.json",    "iota_example.json"};
  std::map<std::string, json> fx;
  for (const auto& n : names) fx[n] = testing::load_fixture(n);

  // Fixtures survive parse -> serialize unchanged.
  bool stable = true;
  for (const auto& [n, j] : fx)
    for (const char* key : {"tableau", "input", "p", "q", "image"}) {
      std::function<void(const json&)> walk = [&](const json& node) {
        if (!node.is_object()) return;
        for (auto it = node.begin(); it != node.end(); ++it) {
          if (it.key() == key && it.value().is_object() && it.value().contains("cells"))
            stable = stable && to_json(tableau_from_json(it.value())) == it.value();
          walk(it.value());
        }
      };
      walk(j);
    }
  log.check("fixtures round-trip through parse and serialize", stable);

  {
    const json& ot = fx["weights_ot_ut.json"]["ot"];
    Tableau p = tableau_from_json(ot["tableau"]);
    log.check("OT example is an OT", validate(p, Family::OT));
    check_weight(log, "OT example left weight", left_weight(p), ot["left_weight"]);
    check_weight(log, "OT example right weight", right_weight(p), ot["right_weight"]);
    check_weight(log, "OT example overweight", overweight(p), ot["overweight"]);
    const json& ut = fx["weights_ot_ut.json"]["ut"];
    Tableau q = tableau_from_json(ut["tableau"]);
    log.check("UT example is a UT", validate(q, Family::UT));
    check_weight(log, "UT example left weight", left_weight(q), ut["left_weight"]);
    check_weight(log, "UT example right weight", right_weight(q), ut["right_weight"]);
    check_weight(log, "UT example underweight", underweight(q), ut["underweight"]);
  }
  {
    const json& f = fx["weights_flagged.json"];
    Tableau p = tableau_from_json(f["oft"]["tableau"]);
    Tableau q = tableau_from_json(f["uft"]["tableau"]);
    log.check("OFT example is an OFT", validate(p, Family::OFT));
    check_weight(log, "OFT example weight", flag_weight(p), f["oft"]["weight"]);
    log.check("UFT example is a UFT", validate(q, Family::UFT));
    check_weight(log, "UFT example weight", flag_weight(q), f["uft"]["weight"]);
  }
  {
    const json& f = fx["rsk_example.json"];
    Tableau input = tableau_from_json(f["input"]);
    Trace tr;
    RskPair pr = rsk_forward(input, &tr);
    log.check("RSK P", pr.p == tableau_from_json(f["p"]), diagram(pr.p));
    log.check("RSK Q", pr.q == tableau_from_json(f["q"]), diagram(pr.q));
    std::string why;
    log.check("RSK 7-panel trace", trace_matches(tr, f, false, why), why);
    log.check("RSK inverse", rsk_backward(pr, input.shape().outer()) == input);
  }
  {
    const json& f = fx["jdt_example.json"];
    Tableau input = tableau_from_json(f["input"]);
    Trace tr;
    JdtPair pr = jdt_forward(input, &tr);
    log.check("jdt P", pr.p == tableau_from_json(f["p"]), diagram(pr.p));
    log.check("jdt Q", pr.q == tableau_from_json(f["q"]), diagram(pr.q));
    std::string why;
    log.check("jdt 9-panel trace", trace_matches(tr, f, true, why), why);
    log.check("jdt inverse", jdt_backward(pr, input.shape().outer()) == input);
  }
  {
    const json& f = fx["swap_example.json"];
    TotalOrder from = parse_order(f["from"].get<std::string>()), to = parse_order(f["to"].get<std::string>());
    Tableau s = tableau_from_json(f["input"]), t = tableau_from_json(f["image"]);
    log.check("S is a PT under the source order", validate_pt_order(s, from));
    Tableau img = order_swap_up(s, from, to);
    log.check("order swap S -> T", img == t, diagram(img));
    auto sizes = component_sizes(s, Letter{3, false}, Letter{2, true});
    log.check("order swap components", sizes == f["component_sizes"].get<std::vector<int>>());
    log.check("order swap inverse", order_swap_down(t, to, from) == s);
  }
  {
    const json& f = fx["iota_example.json"];
    Tableau a = tableau_from_json(f["input"]), b = tableau_from_json(f["image"]);
    IotaSite s = iota_site(a);
    log.check("iota site m, i, j", s.m == f["site"]["m"] && s.row == f["site"]["row"] && s.col == f["site"]["col"],
              "m=" + std::to_string(s.m) + " i=" + std::to_string(s.row) + " j=" + std::to_string(s.col));
    log.check("iota image", iota(a) == b);
    log.check("iota involution", iota(b) == a);
  }

  Outcome o;
  o.pass = log.failed.empty();
  std::ostringstream d;
  if (o.pass) {
    d << log.total << "/" << log.total << " items";
  } else {
    d << log.failed.size() << "/" << log.total << " items failed: ";
    for (std::size_t k = 0; k < log.failed.size(); ++k) d << (k ? ", " : "") << log.failed[k];
  }
  o.detail = d.str();
  return o;
}

// ------------------------------------------------------------ criteria 2-7

Outcome run_identities(const std::vector<std::pair<std::string, VerifyParams>>& runs) {
  Outcome o;
  std::ostringstream d;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    VerifyReport r = verify(runs[k].first, runs[k].second);
    std::cout << "  " << r.to_text() << "\n";
    for (std::size_t f = 0; f < r.failures.size() && f < 5; ++f) std::cout << "    " << r.failures[f] << "\n";
    o.pass = o.pass && r.passed();
    d << (k ? "; " : "") << r.identity << " " << r.status() << " on " << r.instances << " instances";
  }
  o.detail = d.str();
  return o;
}

VerifyParams upto(int n) {
  VerifyParams p;
  p.max_size = n;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"worked examples from fixtures", criterion1}},
      {2, {"RSK and jdt bijections (RSK |mu|<=4 N=3 B=2; jdt |lambda|<=5 N=3)",
           [] { return run_identities({{"lemma-rskjdt", VerifyParams{}}}); }}},
      {3, {"reorder bijections (values<=3, distance<=3, |lambda|<=5)",
           [] { return run_identities({{"lemma-ordering", VerifyParams{}}}); }}},
      {4, {"sign-reversing involution and flagged signed sum (|lambda|<=6)",
           [] { return run_identities({{"lemma-z", upto(6)}, {"fact2", upto(6)}}); }}},
      {5, {"omega duality (|lambda|<=4)",
           [] { return run_identities({{"fact1", upto(4)}, {"duo1", upto(4)}}); }}},
      {6, {"Hall orthonormality (|mu|,|lambda|<=4)", [] { return run_identities({{"duo2", upto(4)}}); }}},
      {7, {"oracle cross-checks (|lambda|<=4, n=3)", [] { return run_identities({{"oracle", upto(4)}}); }}},
  };
  std::vector<int> chosen;
  for (int k = 1; k < argc; ++k) {
    int c = 0;
    try {
      c = std::stoi(argv[k]);
    } catch (const std::exception&) {
    }
    if (!criteria.count(c)) {
      std::cerr << "unknown criterion " << argv[k] << "\n";
      return 2;
    }
    chosen.push_back(c);
  }
  if (chosen.empty())
    for (const auto& [c, _] : criteria) chosen.push_back(c);

  bool all = true;
  for (int c : chosen) {
    const auto& [title, run] = criteria.at(c);
    std::cout << "criterion " << c << " [" << title << "]\n";
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ") ["
         << secs << " s]";
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
