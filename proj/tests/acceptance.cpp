// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffz/demos.hpp"

#ifndef FFZ_UNIT_TEST_BINARIES
#define FFZ_UNIT_TEST_BINARIES ""
#endif

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

/// Runs a demo; fails on any failed check or when it exceeds the limit.
Outcome demo_within(const std::string& name, double limit_s) {
  const auto start = Clock::now();
  const auto report = ffz::run_demo(name);
  const double t = seconds_since(start);
  std::string detail;
  for (const auto& c : report.checks)
    if (!c.pass) detail += "[failed: " + c.label + (c.detail.empty() ? "" : " -- " + c.detail) + "] ";
  const bool in_time = limit_s <= 0 || t < limit_s;
  if (!in_time) detail += "[over " + fmt_seconds(limit_s) + "] ";
  return {report.passed() && in_time, detail + fmt_seconds(t)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

Outcome unit_suites(double demos_s) {
  const auto start = Clock::now();
  const auto binaries = split(FFZ_UNIT_TEST_BINARIES, ';');
  if (binaries.empty()) return {false, "no unit test binaries configured"};
  std::string failed;
  for (const auto& bin : binaries) {
    const std::string cmd = "\"" + bin + "\" --gtest_brief=1 > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) failed += " " + bin.substr(bin.find_last_of('/') + 1);
  }
  const double total = seconds_since(start) + demos_s;
  const bool in_time = total < 300.0;
  std::string detail = std::to_string(binaries.size()) + " suites";
  if (!failed.empty()) detail += ", failing:" + failed;
  detail += ", total with demos " + fmt_seconds(total);
  if (!in_time) detail += " [over 300s]";
  return {failed.empty() && in_time, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "X^2-T vs X^2-(T+1) over F_3: Weil equal, Goss and lifted differ at T, Klein pair not Gassmann",
       [] { return demo_within("malakie", 5); }},
      {2, "X^3-X-T over F_3: B(n) mod 3 is the cube indicator, deg n <= 6", [] { return demo_within("pgalois", 30); }},
      {3, "X^3-X-T vs X^3-X-T^5 over F_3, D=8: Goss equal, Weil differ", [] { return demo_within("genus", 60); }},
      {4, "Weil coefficients mod p equal Goss block sums on the test set", [] { return demo_within("gossrem", 0); }},
      {5, "splitting types reconstructed from Goss residues over F_5", [] { return demo_within("reconstruct", 0); }},
      {6, "perturbations by p seen by W_2 only; lifted EQUAL iff splitting types agree", [] { return demo_within("brr", 0); }},
      {7, "PSL(2,7): order 168, two classes of index 8, Gassmann and not conjugate", [] { return demo_within("psl27", 60); }},
      {8, "(Z/3)^3 and Heisenberg(3) in S_27 are Gassmann equivalent", [] { return demo_within("komatsu", 30); }},
      {9, "Witt layer: ghost identities, axioms, Teichmuller, reduction, special values",
       [] { return demo_within("witt", 0); }},
  };

  bool all = true;
  const auto demos_start = Clock::now();
  auto line = [&](int id, const std::string& title, const Outcome& o) {
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " (" << o.detail << ")\n";
  };
  for (const auto& c : criteria) {
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    line(c.id, c.title, o);
  }
  line(10, "all unit and property suites pass; full run under 5 minutes", unit_suites(seconds_since(demos_start)));
  std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
  return all ? 0 : 1;
}
