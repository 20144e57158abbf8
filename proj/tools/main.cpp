#include <CLI11.hpp>

#include <iostream>

#include "knotflow/invariants.hpp"
#include "knotflow/qalg.hpp"
#include "knotflow/zeta.hpp"

using namespace kf;

namespace {

std::string show(const Laurent& p, bool canonical) { return canonical ? p.str() : p.pretty(); }

int run_mmr(const Diagram& d, const std::vector<int>& orders, int D) {
  MmrReport rep = mmr_report(d, orders, D);
  std::cout << "limit: " << rep.limit.str() << "\n";
  for (size_t k = 0; k < orders.size(); ++k) {
    std::cout << "n=" << orders[k] << ": " << rep.values[k].str() << "\n  err:";
    for (auto& e : rep.err[k]) std::cout << " " << e.get_str();
    std::cout << "\n";
  }
  auto bad = mmr_nonmonotone(rep);
  if (bad.empty()) {
    std::cout << "monotone: yes\n";
    return 0;
  }
  std::cout << "monotone: no (j =";
  for (int j : bad) std::cout << " " << j;
  std::cout << ")\n";
  return 1;
}

int selftest_zeta(uint64_t seed, int max_v, int D, int count) {
  int fails = 0;
  for (int k = 0; k < count; ++k) {
    int nv = 1 + int((seed + k) % uint64_t(max_v));
    WeightedDigraph g = random_digraph(seed * 1000003 + k, nv, 2 * nv);
    bool ok = fz_identity_check(g, D) && zeta_lyndon(g, D) == zeta_flow_sum(g, D);
    fails += !ok;
    std::cout << "digraph " << k << " v=" << nv << " edges=";
    for (size_t e = 0; e < g.edges.size(); ++e)
      std::cout << (e ? "," : "") << g.edges[e].first + 1 << ">" << g.edges[e].second + 1;
    if (g.edges.empty()) std::cout << "-";
    std::cout << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  std::vector<int> w{3, 4, 5, 1, 2, 4, 2, 1, 2, 3, 1, 2, 4, 2};
  WordMaps wm = word_maps(5, w);
  std::cout << "factors:";
  for (auto& f : wm.factors) {
    std::cout << " ";
    for (int x : f) std::cout << x;
  }
  MultiPoly dec(25, int(w.size()));
  dec.add(wm.dec, 1);
  std::cout << "\nbeta_dec: " << dec.str(complete_names(5)) << "\n";
  return fails ? 1 : 0;
}

int selftest_qmm(int D) {
  int fails = 0;
  for (int r = 1; r <= 3; ++r) {
    QMatrix A = generic_matrix(r);
    NCPoly p = inverse_product(A, D, Rules::RightQuantum);
    bool ok = p == NCPoly{{"", Laurent(1)}};
    fails += !ok;
    std::cout << "generic " << r << "x" << r << " ferm*inverse mod degree " << D + 1 << ": "
              << (ok ? "PASS" : "FAIL " + render(A, p)) << "\n";
  }
  QMatrix A = generic_matrix(2);
  std::cout << "det_q 2x2: " << render(A, det_q(A, Rules::RightQuantum)) << "\n";
  NCPoly da{{std::string{char(A.cell(2, 2)), char(A.cell(1, 1))}, Laurent(1)}};
  std::cout << "normalize(d a): " << render(A, nc_normalize(A, da, Rules::RightQuantum)) << "\n";
  return fails ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot invariants from arc graphs and flows"};
  app.require_subcommand(1);
  std::string path, method;
  int n = 1, max_n = 2, degree = 4, max_v = 3, count = 50;
  uint64_t seed = 1;
  bool canonical = false, with_ferm = false;
  std::vector<int> orders{10, 20, 40};

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("file", path, "KDT file")->required();
  alex->add_flag("--canonical", canonical, "print the canonical term list");

  auto* jones = app.add_subcommand("jones", "Jones polynomial");
  jones->add_option("file", path, "KDT file")->required();
  jones->add_option("--method", method, "arcsum|flow|rmatrix")
      ->check(CLI::IsMember({"arcsum", "flow", "rmatrix"}))
      ->default_str("arcsum");
  jones->add_flag("--canonical", canonical);

  auto* colored = app.add_subcommand("colored", "colored Jones polynomial J_n");
  colored->add_option("file", path, "KDT file")->required();
  colored->add_option("-n", n, "color")->check(CLI::PositiveNumber);
  colored->add_option("--method", method, "flow|cabled|sortings|ferm")
      ->check(CLI::IsMember({"flow", "cabled", "sortings", "ferm"}))
      ->default_str("flow");
  colored->add_flag("--canonical", canonical);

  auto* ver = app.add_subcommand("verify", "cross-check all routes");
  ver->add_option("file", path, "KDT file")->required();
  ver->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  ver->add_flag("--ferm", with_ferm, "include the non-commutative route");

  auto* mmr = app.add_subcommand("mmr", "convergence of J_n(e^(h/n)) to 1/Alexander");
  mmr->add_option("file", path, "KDT file")->required();
  mmr->add_option("--orders", orders)->delimiter(',')->check(CLI::PositiveNumber);
  mmr->add_option("--degree", degree)->check(CLI::Range(2, 40));

  auto* self = app.add_subcommand("selftest", "randomized and algebraic self-checks");
  self->require_subcommand(1);
  auto* sz = self->add_subcommand("zeta", "zeta function identities on random digraphs");
  sz->add_option("--seed", seed);
  sz->add_option("--max-vertices", max_v)->check(CLI::Range(1, 8));
  sz->add_option("--degree", degree)->check(CLI::Range(0, 12));
  sz->add_option("--count", count)->check(CLI::NonNegativeNumber);
  auto* sq = self->add_subcommand("qmm", "q-MacMahon inverse on generic right-quantum matrices");
  sq->add_option("--degree", degree)->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*alex) {
      std::cout << show(alexander(load_kdt(path)).value, canonical) << "\n";
    } else if (*jones) {
      Diagram d = load_kdt(path);
      Laurent j = method == "flow"      ? colored_jones_flow(d, 1)
                  : method == "rmatrix" ? rmatrix_jones(d).jones
                                        : jones_arcsum(d);
      std::cout << show(j, canonical) << "\n";
    } else if (*colored) {
      Diagram d = load_kdt(path);
      Laurent j = method == "cabled"     ? colored_jones_cabled(d, n).value
                  : method == "sortings" ? colored_jones_sortings(d, n)
                  : method == "ferm"     ? colored_jones_ferm(d, n)
                                         : colored_jones_flow(d, n);
      std::cout << show(j, canonical) << "\n";
    } else if (*ver) {
      int rc = 0;
      for (auto& l : verify(load_kdt(path), max_n, with_ferm)) {
        std::cout << l.text << "\n";
        if (l.mismatch) rc = 1;
      }
      return rc;
    } else if (*mmr) {
      return run_mmr(load_kdt(path), orders, degree);
    } else if (*sz) {
      return selftest_zeta(seed, max_v, degree, count);
    } else if (*sq) {
      return selftest_qmm(degree);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid diagram:\n";
    for (auto& v : e.violations) std::cerr << "  " << v << "\n";
    return 2;
  } catch (const InvalidArgs& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
