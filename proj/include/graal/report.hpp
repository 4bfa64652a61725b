// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "graal/apps.hpp"
#include "graal/compress.hpp"

namespace graal {

using Json = nlohmann::ordered_json;

inline Json tower_json(const RingTower& T) {
  Json u = Json::array(), v = Json::array();
  for (int i : T.U) u.push_back(T.Q.vars->names[static_cast<size_t>(i)]);
  for (int i : T.V) v.push_back(T.Q.vars->names[static_cast<size_t>(i)]);
  return Json{{"U", std::move(u)}, {"V", std::move(v)}, {"s", T.s()}};
}

inline std::string tower_text(const RingTower& T) {
  std::string u, v;
  for (int i : T.U) {
    if (!u.empty()) u += ", ";
    u += T.Q.vars->names[static_cast<size_t>(i)];
  }
  for (int i : T.V) {
    if (!v.empty()) v += ", ";
    v += T.Q.vars->names[static_cast<size_t>(i)];
  }
  return "U = { " + u + " }  V = { " + v +
         " }  s = " + std::to_string(T.s());
}

namespace detail {

template <class Fld>
Json vec_json(const Vec<Fld>& v) {
  Json col = Json::array();
  for (int i = 0; i < v.rank(); ++i) col.push_back(to_string(v[i]));
  return col;
}

template <class Fld>
std::string vec_text(const Vec<Fld>& v) {
  std::string out = "[";
  for (int i = 0; i < v.rank(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

inline Json int_strings(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace detail

// ---- per-command result payloads ----

inline Json gr_result_json(const GradedPresentation& gp,
                           const CompressedField& cf) {
  Json gens = Json::array();
  for (auto& g : gp.I_in_gb) gens.push_back(to_string(g));
  Json yvars = Json::array();
  for (auto& n : gp.KY.vars->names) yvars.push_back(n);
  return Json{{"graded_variables", std::move(yvars)},
              {"graded_ideal", std::move(gens)},
              {"residue_degree", cf.degree},
              {"residue_minpoly", to_string(cf.minpoly)},
              {"compress_attempts", cf.attempts}};
}

inline std::string gr_result_text(const GradedPresentation& gp,
                                  const CompressedField& cf) {
  std::string vars;
  for (auto& n : gp.KY.vars->names) {
    if (!vars.empty()) vars += ", ";
    vars += n;
  }
  std::string out = "graded ring: K[" + vars + "] modulo\n";
  if (gp.I_in_gb.empty()) out += "  0\n";
  for (auto& g : gp.I_in_gb) out += "  " + to_string(g) + "\n";
  out += "residue field degree: " + std::to_string(cf.degree) + "\n";
  out += "residue minimal polynomial: " + to_string(cf.minpoly) + "\n";
  out += "compression attempts: " + std::to_string(cf.attempts);
  return out;
}

inline Json dim_result_json(int d) { return Json{{"dimension", d}}; }

inline Json regular_result_json(const GradedPresentation& gp, bool reg) {
  return Json{{"regular", reg},
              {"dimension", local_dim(gp)},
              {"embedding_dimension", gp.P->s() - linear_count(gp)}};
}

inline Json sop_result_json(const GradedPresentation& gp,
                            const SopResult& r) {
  Json mat = Json::array();
  for (auto& row : r.coeff_matrix) {
    Json jr = Json::array();
    for (long c : row) jr.push_back(c);
    mat.push_back(std::move(jr));
  }
  Json elems = Json::array();
  for (auto& e : r.elements) elems.push_back(to_string(e));
  return Json{{"dimension", local_dim(gp)},
              {"coeff_matrix", std::move(mat)},
              {"elements", std::move(elems)},
              {"regular", r.regular},
              {"attempts", r.attempts}};
}

inline std::string sop_result_text(const GradedPresentation& gp,
                                   const SopResult& r) {
  std::string out = "dimension: " + std::to_string(local_dim(gp)) + "\n";
  out += "elements:\n";
  if (r.elements.empty()) out += "  (none, dimension 0)\n";
  for (auto& e : r.elements) out += "  " + to_string(e) + "\n";
  out += std::string("regular: ") + (r.regular ? "true" : "false") + "\n";
  out += "attempts: " + std::to_string(r.attempts);
  return out;
}

inline Json hilbert_result_json(const HilbertData& h) {
  return Json{{"dimension", h.degree_d},
              {"a_coeffs", detail::int_strings(h.a_coeffs)},
              {"constant", h.constant_c.get_str()},
              {"threshold", h.threshold_l},
              {"values", detail::int_strings(h.hs_values)}};
}

// Eq-style rendering: sum of a_{v-1} * C(n, v) plus the constant
inline std::string hilbert_poly_text(const HilbertData& h) {
  std::string out;
  for (size_t nu = 0; nu < h.a_coeffs.size(); ++nu) {
    if (h.a_coeffs[nu] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = h.a_coeffs[nu].get_str();
    out += (c == "1" ? "" : c + "*") + std::string("C(n, ") +
           std::to_string(nu + 1) + ")";
  }
  if (out.empty()) return h.constant_c.get_str();
  if (h.constant_c != 0) out += " + " + h.constant_c.get_str();
  return out;
}

inline std::string hilbert_result_text(const HilbertData& h) {
  std::string out =
      "quotient dimension: " + std::to_string(h.degree_d) + "\n";
  out += "samuel polynomial: HS(n) = " + hilbert_poly_text(h) + "\n";
  out += "valid from n = " + std::to_string(h.threshold_l) + "\n";
  out += "values HS(0.." + std::to_string(h.hs_values.size() - 1) + "): ";
  for (size_t i = 0; i < h.hs_values.size(); ++i) {
    if (i) out += " ";
    out += h.hs_values[i].get_str();
  }
  return out;
}

inline Json resolve_result_json(const Resolution& res) {
  Json ranks = Json::array();
  for (int r : res.ranks) ranks.push_back(r);
  Json steps = Json::array();
  for (auto& st : res.steps) {
    Json shifts = Json::array();
    for (int d : st.source_shifts) shifts.push_back(d);
    Json grm = Json::array(), alm = Json::array();
    for (auto& c : st.gr_cols) grm.push_back(detail::vec_json(c));
    for (auto& c : st.al_cols) alm.push_back(detail::vec_json(c));
    steps.push_back(Json{{"source_shifts", std::move(shifts)},
                         {"graded_matrix", std::move(grm)},
                         {"lifted_matrix", std::move(alm)}});
  }
  return Json{{"ranks", std::move(ranks)},
              {"finished", res.finished},
              {"steps", std::move(steps)}};
}

inline std::string resolve_result_text(const Resolution& res) {
  std::string out = "ranks:";
  for (int r : res.ranks) out += " " + std::to_string(r);
  out += "\nfinished: ";
  out += res.finished ? "true" : "false";
  for (size_t k = 0; k < res.steps.size(); ++k) {
    auto& st = res.steps[k];
    out += "\nstep " + std::to_string(k + 1) + ": shifts (";
    for (size_t i = 0; i < st.source_shifts.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(st.source_shifts[i]);
    }
    out += ")";
    for (size_t i = 0; i < st.gr_cols.size(); ++i)
      out += "\n  graded column " + std::to_string(i + 1) + ": " +
             detail::vec_text(st.gr_cols[i]);
    for (size_t i = 0; i < st.al_cols.size(); ++i)
      out += "\n  lifted column " + std::to_string(i + 1) + ": " +
             detail::vec_text(st.al_cols[i]);
  }
  return out;
}

// ---- assembled report ----

inline Json make_report(const std::string& command, std::uint64_t seed,
                        const RingTower& T, Json result, double ms) {
  return Json{{"command", command},
              {"seed", seed},
              {"tower", tower_json(T)},
              {"result", std::move(result)},
              {"timings", Json{{"total_ms", ms}}}};
}

inline std::string make_text_report(const std::string& command,
                                    const RingTower& T,
                                    const std::string& body, double ms) {
  std::ostringstream ms_str;
  ms_str.precision(1);
  ms_str << std::fixed << ms;
  return "command: " + command + "\n" + tower_text(T) + "\n" + body +
         "\ntime: " + ms_str.str() + " ms\n";
}

class ReportClock {
 public:
  ReportClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(d);
    return static_cast<double>(us.count()) / 1000.0;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Exit-code policy shared by the CLI and its tests: 0 success, 1 bad
// input, 2 failed internal verification (or any other internal error).
template <class F>
int run_guarded(F&& body) {
  try {
    body();
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const VerifyError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace graal
