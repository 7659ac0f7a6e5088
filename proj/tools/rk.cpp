#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigcon/acceptance.hpp"
#include "rigcon/catalan.hpp"
#include "rigcon/error.hpp"
#include "rigcon/gt.hpp"
#include "rigcon/internal.hpp"
#include "rigcon/kostka.hpp"
#include "rigcon/stretched.hpp"
#include "rigcon/tableaux.hpp"

using namespace rigcon;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitCap = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json = false;
  bool coeffs = false;
};
Output g_out;

json big(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json big_list(const std::vector<mpz_class>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(big(x));
  return a;
}

std::string tuple(const std::vector<mpz_class>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s + ")";
}

json poly_json(const QPolynomial& p, const std::string& var = "q") {
  return json{{"text", p.to_string(var)}, {"min_degree", p.is_zero() ? 0 : p.min_degree()}, {"coeffs", big_list(p.coeffs())}};
}

// Sparse text, or "q^a (c0,c1,...)" with --coeffs.
std::string poly_text(const QPolynomial& p, const std::string& var = "q") {
  if (!g_out.coeffs || p.is_zero()) return p.to_string(var);
  std::string t = tuple(p.coeffs());
  if (p.min_degree() == 0) return t;
  return var + "^" + std::to_string(p.min_degree()) + " " + t;
}

json parts_json(const Partition& p) { return json(p.parts()); }

Partition partition_flag(const std::string& text, const std::string& flag) {
  try {
    return Partition::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

RectangleSequence rect_flag(const std::string& text, const std::string& flag) {
  try {
    return RectangleSequence::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<int> composition_flag(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

void emit(const std::string& command, json body, const std::string& text) {
  if (g_out.json) {
    json doc{{"schema", 1}, {"command", command}};
    for (auto& [k, v] : body.items()) doc[k] = v;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

json configuration_json(const Configuration& cfg) {
  json levels = json::array();
  for (const auto& l : cfg.levels()) levels.push_back(parts_json(l));
  json vac = json::array();
  for (const auto& f : cfg.factors()) vac.push_back({f.k, f.j, f.vacancy});
  return json{{"levels", levels}, {"charge", cfg.charge()}, {"vacancy", vac}};
}

std::string configuration_text(const Configuration& cfg) {
  std::ostringstream s;
  s << cfg.to_string() << "  charge " << cfg.charge() << "  P:";
  for (const auto& f : cfg.factors()) s << " P" << f.j << "^(" << f.k << ")=" << f.vacancy;
  return s.str();
}

json contribution_json(const Contribution& c) {
  json f = json::array();
  for (const auto& x : c.factors) f.push_back({{"k", x.k}, {"j", x.j}, {"vacancy", x.vacancy}, {"m", x.multiplicity}});
  json j = configuration_json(c.config);
  j["factors"] = f;
  j["term"] = poly_json(c.term);
  return j;
}

std::string contribution_text(const Contribution& c) {
  std::ostringstream s;
  s << c.config.to_string() << "  q^" << c.charge;
  for (const auto& x : c.factors) s << " [" << (x.vacancy + x.multiplicity) << " " << x.multiplicity << "]";
  s << "  = " << poly_text(c.term);
  return s.str();
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigged configurations, Kostka polynomials and related counts"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> cap;
  app.add_flag("--json", g_out.json, "emit a JSON report");
  app.add_flag("--coeffs", g_out.coeffs, "print polynomials as coefficient tuples");
  app.add_option("--cap", cap, "enumeration cap (default RK_CAP or 10^7)");
  std::function<int()> action;

  // kostka
  std::string lambda_s, mu_s, rect_s, method;
  bool at_one = false, want_q = false, decompose = false;
  auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
  kostka->add_option("--lambda", lambda_s)->required();
  kostka->add_option("--mu", mu_s)->required();
  kostka->add_flag("--q", want_q, "polynomial (default)");
  kostka->add_flag("--at-one", at_one, "value at q = 1");
  kostka->add_option("--method", method, "fermionic|charge|gt")->check(CLI::IsMember({"fermionic", "charge", "gt"}));
  kostka->add_flag("--decompose", decompose, "list configuration contributions");
  kostka->callback([&] {
    action = [&] {
      Partition lam = partition_flag(lambda_s, "--lambda");
      std::vector<int> mu = composition_flag(mu_s, "--mu");
      std::string m = method.empty() ? "fermionic" : method;
      if (m == "gt") {
        mpz_class n = count_gt_points(lam, mu);
        emit("kostka", {{"method", m}, {"value", big(n)}}, n.get_str());
        return kExitOk;
      }
      QPolynomial p;
      json body{{"method", m}};
      std::string text;
      if (m == "charge") {
        for (const auto& t : enumerate_ssyt(lam, mu)) p += QPolynomial::monomial(1, static_cast<int>(charge_statistic(t)));
      } else {
        Partition mup = partition_flag(mu_s, "--mu");
        KostkaResult r = kostka_foulkes(lam, mup, decompose);
        p = r.polynomial;
        if (decompose) {
          json cs = json::array();
          for (const auto& c : r.contributions) {
            cs.push_back(contribution_json(c));
            text += contribution_text(c) + "\n";
          }
          body["contributions"] = cs;
        }
      }
      if (at_one) {
        body["value"] = big(p.at_one());
        text += p.at_one().get_str();
      } else {
        body["polynomial"] = poly_json(p);
        text += poly_text(p);
      }
      emit("kostka", body, text);
      return kExitOk;
    };
  });

  // pkostka
  auto* pkostka = app.add_subcommand("pkostka", "parabolic Kostka polynomial K_{lambda,R}(q)");
  pkostka->add_option("--lambda", lambda_s)->required();
  pkostka->add_option("--rect", rect_s, "rectangles, e.g. 2^3,2^2,1")->required();
  pkostka->add_flag("--q", want_q, "polynomial (default)");
  pkostka->add_flag("--at-one", at_one, "value at q = 1");
  pkostka->add_flag("--decompose", decompose, "list configuration contributions");
  pkostka->callback([&] {
    action = [&] {
      Partition lam = partition_flag(lambda_s, "--lambda");
      RectangleSequence rects = rect_flag(rect_s, "--rect");
      json body;
      std::string text;
      if (at_one && !decompose) {
        mpz_class v = parabolic_kostka_at_one(lam, rects);
        if (!rects.is_dominant()) print_warnings({"rectangle sequence " + rects.to_string() + " is not dominant"});
        emit("pkostka", {{"value", big(v)}}, v.get_str());
        return kExitOk;
      }
      KostkaResult r = parabolic_kostka(lam, rects, decompose);
      print_warnings(r.warnings);
      body["warnings"] = r.warnings;
      if (decompose) {
        json cs = json::array();
        for (const auto& c : r.contributions) {
          cs.push_back(contribution_json(c));
          text += contribution_text(c) + "\n";
        }
        body["contributions"] = cs;
      }
      if (at_one) {
        body["value"] = big(r.polynomial.at_one());
        text += r.polynomial.at_one().get_str();
      } else {
        body["polynomial"] = poly_json(r.polynomial);
        text += poly_text(r.polynomial);
      }
      emit("pkostka", body, text);
      return kExitOk;
    };
  });

  // configs
  bool with_matrix = false;
  auto* configs = app.add_subcommand("configs", "admissible configurations of a type");
  configs->add_option("--lambda", lambda_s)->required();
  auto* cfg_rect = configs->add_option("--rect", rect_s, "rectangles");
  auto* cfg_mu = configs->add_option("--mu", mu_s, "unit rows of mu");
  cfg_rect->excludes(cfg_mu);
  configs->add_flag("--matrix", with_matrix, "include the integer matrix");
  configs->callback([&] {
    action = [&] {
      Partition lam = partition_flag(lambda_s, "--lambda");
      if (rect_s.empty() && mu_s.empty()) throw UsageError("--rect or --mu is required");
      RectangleSequence rects = rect_s.empty() ? RectangleSequence::unit_rows(partition_flag(mu_s, "--mu"))
                                               : rect_flag(rect_s, "--rect");
      auto all = enumerate_admissible(lam, rects);
      json list = json::array();
      std::string text;
      for (const auto& c : all) {
        json j = configuration_json(c);
        text += configuration_text(c) + "\n";
        if (with_matrix) {
          ConfigMatrix m = to_matrix(c);
          j["matrix"] = m.entries;
          for (const auto& row : m.entries) {
            text += "   ";
            for (long x : row) text += " " + std::to_string(x);
            text += "\n";
          }
        }
        list.push_back(j);
      }
      text += std::to_string(all.size()) + " admissible configurations";
      emit("configs", {{"count", all.size()}, {"configurations", list}}, text);
      return kExitOk;
    };
  });

  // catalan, narayana, macmahon, schroeder
  int n = 0, m = 0, k = 0, d = 0, nmax = 0;
  auto* catalan = app.add_subcommand("catalan", "rectangular Catalan number C(n,m|q)");
  catalan->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  catalan->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  catalan->add_flag("--q", want_q, "q-polynomial instead of the value at 1");
  catalan->callback([&] {
    action = [&] {
      QPolynomial p = catalan_poly(n, m);
      if (want_q) {
        emit("catalan", {{"polynomial", poly_json(p)}}, poly_text(p));
      } else {
        emit("catalan", {{"value", big(p.at_one())}}, p.at_one().get_str());
      }
      return kExitOk;
    };
  });

  auto* narayana = app.add_subcommand("narayana", "rectangular Narayana numbers N(n,m;k|q)");
  narayana->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  narayana->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  narayana->add_option("--method", method, "maj|bosonic|fermionic")->check(CLI::IsMember({"maj", "bosonic", "fermionic"}));
  narayana->add_flag("--q", want_q, "q-polynomials instead of values at 1");
  narayana->callback([&] {
    action = [&] {
      std::string how = method.empty() ? "maj" : method;
      std::map<int, QPolynomial> rows;
      if (how == "maj") {
        rows = narayana_maj(n, m).by_k;
      } else if (how == "bosonic") {
        rows = narayana_bosonic_table(n, m).by_k;
      } else {
        int shift = m * n * (n - 1) / 2;
        for (const auto& [l, g] : narayana_fermionic(n, m)) rows[l] = g.total.shifted(-shift);
      }
      json table = json::object();
      std::string text;
      for (const auto& [kk, p] : rows) {
        table[std::to_string(kk)] = want_q ? poly_json(p) : big(p.at_one());
        text += std::to_string(kk) + ": " + (want_q ? poly_text(p) : p.at_one().get_str()) + "\n";
      }
      emit("narayana", {{"method", how}, {"by_k", table}}, text);
      return kExitOk;
    };
  });

  auto* macmahon = app.add_subcommand("macmahon", "plane partitions in an n x m box with parts <= k");
  macmahon->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  macmahon->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  macmahon->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  macmahon->callback([&] {
    action = [&] {
      mpz_class v = macmahon_ehrhart(n, m, k);
      emit("macmahon", {{"value", big(v)}}, v.get_str());
      return kExitOk;
    };
  });

  auto* schroeder = app.add_subcommand("schroeder", "C(n,m|1+t) as a polynomial in t");
  schroeder->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  schroeder->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  schroeder->callback([&] {
    action = [&] {
      QPolynomial p = schroeder_poly(n, m);
      emit("schroeder", {{"polynomial", poly_json(p, "t")}}, poly_text(p, "t"));
      return kExitOk;
    };
  });

  // gt-count, gt-gf
  int stretch = -1;
  auto* gt_count = app.add_subcommand("gt-count", "Gelfand-Tsetlin lattice points of GT(lambda, mu)");
  gt_count->add_option("--lambda", lambda_s)->required();
  gt_count->add_option("--mu", mu_s, "composition")->required();
  gt_count->add_option("--stretch", stretch, "counts for N lambda, N mu with N = 0..NMAX")->check(CLI::NonNegativeNumber);
  gt_count->callback([&] {
    action = [&] {
      Partition lam = partition_flag(lambda_s, "--lambda");
      std::vector<int> mu = composition_flag(mu_s, "--mu");
      if (stretch >= 0) {
        auto s = stretched_gt_series(lam, mu, stretch);
        emit("gt-count", {{"series", big_list(s)}}, tuple(s));
      } else {
        mpz_class v = count_gt_points(lam, mu);
        emit("gt-count", {{"value", big(v)}}, v.get_str());
      }
      return kExitOk;
    };
  });

  auto* gt_gf = app.add_subcommand("gt-gf", "generating function of K_{N(n,1^d),N(1^{n+d})}");
  gt_gf->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gt_gf->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  gt_gf->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
  gt_gf->add_flag("--q", want_q, "compare q-polynomials rather than values at 1");
  gt_gf->callback([&] {
    action = [&] {
      bool ok = gt_generating_function_check(n, d, nmax, want_q);
      emit("gt-gf", {{"agrees", ok}}, ok ? "agrees" : "DISAGREES");
      return ok ? kExitOk : kExitVerify;
    };
  });

  // stretched
  std::string fit_power;
  auto* stretched = app.add_subcommand("stretched", "stretched parabolic Kostka numbers K_{N lambda, N R}");
  stretched->add_option("--lambda", lambda_s)->required();
  stretched->add_option("--rect", rect_s)->required();
  stretched->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
  auto* fit = stretched->add_option("--fit", fit_power, "fit P(t)/(1-t)^POWER; POWER from the family if omitted")
                  ->expected(0, 1);
  stretched->add_flag("--q", want_q, "generic q values");
  stretched->callback([&] {
    action = [&] {
      Partition lam = partition_flag(lambda_s, "--lambda");
      RectangleSequence rects = rect_flag(rect_s, "--rect");
      StretchSeries s = stretched_values(lam, rects, nmax, want_q);
      json body{{"values", big_list(s.values)}};
      std::string text = "values " + tuple(s.values) + "\n";
      if (want_q) {
        json qs = json::array();
        for (std::size_t i = 0; i < s.q_values.size(); ++i) {
          qs.push_back(poly_json(s.q_values[i]));
          text += "N=" + std::to_string(i) + ": " + poly_text(s.q_values[i]) + "\n";
        }
        body["q_values"] = qs;
      }
      if (fit->count() > 0) {
        std::optional<int> power;
        if (!fit_power.empty()) {
          try {
            power = std::stoi(fit_power);
          } catch (const std::exception&) {
            throw UsageError("--fit: '" + fit_power + "' is not an integer");
          }
          if (*power < 1) throw UsageError("--fit: power must be positive");
        }
        RationalGF gf = fit_stretched(s, power);
        auto num = gf.numerator_at_one();
        int denom = static_cast<int>(gf.denominator_exponents.size());
        body["numerator"] = big_list(num);
        body["denominator_power"] = denom;
        text += "numerator " + tuple(num) + " / (1-t)^" + std::to_string(denom) + "\n";
      }
      emit("stretched", body, text);
      return kExitOk;
    };
  });

  // okounkov
  int power = 2;
  long window = 200;
  auto* okounkov = app.add_subcommand("okounkov", "threshold where K_{2N lambda} exceeds a power of K_{N lambda}");
  okounkov->add_option("--n", n)->required();
  okounkov->add_option("--power", power)->check(CLI::IsMember({2, 3}));
  okounkov->add_option("--window", window, "N past the threshold checked directly")->check(CLI::PositiveNumber);
  okounkov->callback([&] {
    action = [&] {
      ThresholdReport r = okounkov_threshold(n, power, window);
      json body{{"n", r.n},
                {"power", r.power},
                {"threshold", r.threshold},
                {"fails_below", r.fails_below},
                {"holds_on_window", r.holds_on_window},
                {"window", r.window},
                {"certified", r.certified}};
      std::ostringstream text;
      text << "threshold " << r.threshold << "\nfails below: " << (r.fails_below ? "yes" : "no")
           << "\nholds on window of " << r.window << ": " << (r.holds_on_window ? "yes" : "no")
           << "\nno later sign change: " << (r.certified ? "yes" : "no") << "\n";
      if (n == 3 || n == 5) {
        bool holds = okounkov_certificate(n);
        body["factorization_holds"] = holds;
        text << "reference factorization: " << (holds ? "holds" : "fails");
        if (auto scale = certificate_scale(n)) {
          body["factorization_scale"] = scale->get_str();
          if (!holds) text << " (left side is " << scale->get_str() << " x right side)";
        }
        text << "\n";
      }
      emit("okounkov", body, text.str());
      return r.fails_below && r.holds_on_window && r.certified ? kExitOk : kExitVerify;
    };
  });

  // internal, liskova
  std::string alpha_s, beta_s;
  int big_n = 0, depth = 0;
  auto* internal = app.add_subcommand("internal", "principal specialization of s_alpha * s_beta");
  internal->add_option("--alpha", alpha_s)->required();
  internal->add_option("--beta", beta_s)->required();
  internal->add_option("--N", big_n, "specialize at q, ..., q^{N-1}")->required();
  internal->add_option("--method", method, "character|fermionic|both")
      ->check(CLI::IsMember({"character", "fermionic", "both"}));
  internal->add_option("--limit", depth, "stable prefix of this depth")->check(CLI::PositiveNumber);
  internal->add_flag("--decompose", decompose, "list configuration contributions");
  internal->callback([&] {
    action = [&] {
      Partition a = partition_flag(alpha_s, "--alpha");
      Partition b = partition_flag(beta_s, "--beta");
      std::string how = method.empty() ? "both" : method;
      json body{{"method", how}};
      std::string text;
      int code = kExitOk;
      std::optional<QPolynomial> chi, fer;
      if (how != "fermionic") {
        chi = principal_specialization_character(a, b, big_n);
        body["character"] = poly_json(*chi);
        text += "character: " + poly_text(*chi) + "\n";
      }
      if (how != "character") {
        InternalResult r = internal_fermionic(a, b, big_n);
        fer = r.polynomial;
        body["lambda"] = parts_json(r.lambda);
        body["configurations"] = r.contributions.size();
        body["fermionic"] = poly_json(r.polynomial);
        text += "fermionic: " + poly_text(r.polynomial) + "  (" + std::to_string(r.contributions.size()) +
                " configurations of type ((" + r.lambda.to_string() + "), " + std::to_string(b.largest()) + "^" +
                std::to_string(big_n) + " rows)\n";
        if (decompose) {
          json cs = json::array();
          for (const auto& c : r.contributions) {
            json j = configuration_json(c.config);
            j["term"] = poly_json(c.term);
            cs.push_back(j);
            text += "  " + c.config.to_string() + "  q^" + std::to_string(c.charge) + "  " + poly_text(c.term) + "\n";
          }
          body["contributions"] = cs;
        }
      }
      if (chi && fer) {
        auto ratio = q_power_ratio(*fer, *chi);
        body["agree_up_to_q_power"] = ratio.has_value();
        if (ratio) body["q_power"] = *ratio;
        text += ratio ? "agree up to q^" + std::to_string(*ratio) + "\n" : "DISAGREE\n";
        if (!ratio) code = kExitVerify;
      }
      if (depth > 0) {
        StableLimit s = stable_limit(a, b, depth);
        body["limit"] = {{"N", s.N},
                         {"min_degree", s.min_degree},
                         {"prefix", big_list(s.prefix)},
                         {"hook_scaled", big_list(s.hook_scaled)}};
        text += "stable from N=" + std::to_string(s.N) + ": q^" + std::to_string(s.min_degree) + " " +
                tuple(s.prefix) + "\ntimes H_alpha: " + tuple(s.hook_scaled) + "\n";
      }
      emit("internal", body, text);
      return code;
    };
  });

  auto* liskova_cmd = app.add_subcommand("liskova", "coefficients of s_alpha * s_beta in Hall-Littlewood P_mu");
  liskova_cmd->add_option("--alpha", alpha_s)->required();
  liskova_cmd->add_option("--beta", beta_s)->required();
  liskova_cmd->callback([&] {
    action = [&] {
      auto l = liskova(partition_flag(alpha_s, "--alpha"), partition_flag(beta_s, "--beta"));
      json table = json::object();
      std::string text;
      for (const auto& [mu, p] : l) {
        table[mu.to_string()] = poly_json(p);
        text += "(" + mu.to_string() + "): " + poly_text(p) + "\n";
      }
      emit("liskova", {{"by_mu", table}}, text);
      return kExitOk;
    };
  });

  // words, paths
  std::string weight_s, group_by = "des";
  auto* words = app.add_subcommand("words", "lattice words of a weight");
  words->add_option("--weight", weight_s)->required();
  words->add_option("--group-by", group_by, "des|none")->check(CLI::IsMember({"des", "none"}));
  words->add_flag("--q", want_q, "sum q^maj in each group");
  words->callback([&] {
    action = [&] {
      auto list = lattice_words(partition_flag(weight_s, "--weight"));
      std::map<int, QPolynomial> groups;
      for (const auto& w : list) groups[group_by == "des" ? w.des : 0] += QPolynomial::monomial(1, w.maj);
      json table = json::object();
      std::string text;
      for (const auto& [key, p] : groups) {
        table[std::to_string(key)] = want_q ? poly_json(p) : big(p.at_one());
        text += (group_by == "des" ? std::to_string(key) + ": " : std::string()) +
                (want_q ? poly_text(p) : p.at_one().get_str()) + "\n";
      }
      emit("words", {{"count", list.size()}, {"groups", table}}, text);
      return kExitOk;
    };
  });

  auto* paths = app.add_subcommand("paths", "lattice paths in the Weyl chamber by ascents");
  paths->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  paths->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  paths->callback([&] {
    action = [&] {
      json table = json::object();
      std::string text;
      for (const auto& [kk, c] : lattice_paths_asc(d, n)) {
        table[std::to_string(kk)] = big(c);
        text += std::to_string(kk) + ": " + c.get_str() + "\n";
      }
      emit("paths", table, text);
      return kExitOk;
    };
  });

  // verify
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--suite", suite, "all|paper|fast");
  verify->callback([&] {
    action = [&] {
      std::vector<const Criterion*> list;
      try {
        list = acceptance_suite(suite);
      } catch (const Error& e) {
        throw UsageError(std::string("--suite: ") + e.what());
      }
      json results = json::array();
      int failed = 0;
      for (const Criterion* c : list) {
        CriterionResult r = run_criterion(*c);
        if (!r.passed) ++failed;
        if (g_out.json) {
          results.push_back({{"index", r.index},
                             {"title", r.title},
                             {"passed", r.passed},
                             {"seconds", r.seconds},
                             {"failures", r.failures},
                             {"notes", r.notes}});
        } else {
          std::cout << format_result(r) << std::flush;
        }
      }
      std::string summary =
          std::to_string(list.size() - static_cast<std::size_t>(failed)) + " of " + std::to_string(list.size()) + " passed";
      emit("verify", {{"suite", suite}, {"results", results}, {"passed", failed == 0}}, summary);
      return failed == 0 ? kExitOk : kExitVerify;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (const char* env = std::getenv("RK_CAP"); env && !cap) {
    try {
      cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "RK_CAP: '" << env << "' is not a number\n";
      return kExitUsage;
    }
  }
  if (cap) set_enumeration_cap(*cap);

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::EnumerationCapExceeded:
      case ErrorKind::CapExceeded:
        return kExitCap;
      case ErrorKind::FitFailure:
      case ErrorKind::NoStabilization:
      case ErrorKind::NonIntegral:
        return kExitVerify;
      default:
        return kExitUsage;
    }
  }
}
