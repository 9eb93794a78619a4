#include "sigchar/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "sigchar/characters.hpp"
#include "sigchar/classification.hpp"
#include "sigchar/intertwiner.hpp"
#include "sigchar/paper_tables.hpp"
#include "sigchar/sigengine.hpp"

namespace sigchar::cli {

namespace {

using nlohmann::ordered_json;

int max_n_cap() {
  if (const char* env = std::getenv("HSIG_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

void check_cap(int n) {
  if (n > max_n_cap()) {
    throw std::domain_error("N exceeds the enumeration cap (HSIG_MAX_N)");
  }
}

Mode parse_mode(const std::string& s) {
  if (s == "proven") return Mode::proven_only;
  if (s == "conjectural") return Mode::allow_conjectures;
  if (s == "oracle") return Mode::oracle;
  throw CLI::ValidationError("--mode must be proven|conjectural|oracle");
}

ordered_json signature_json(const SignatureCharacter& s) {
  ordered_json sig = ordered_json::object();
  const auto& all = partitions(s.n());
  for (std::size_t i = 0; i < all.size(); ++i) {
    sig[all[i].str_compact()] = s.coeffs()[i];
  }
  return sig;
}

ordered_json signature_payload(const std::string& input, const SignatureCharacter& s,
                               const std::vector<std::string>& errata = {}) {
  ordered_json j;
  j["input"] = input;
  j["signature"] = signature_json(s);
  j["provenance"] = s.conjectural() ? "conjectural" : "proven";
  j["conjecture_uses"] = s.conjecture_uses();
  j["errata_notes"] = errata;
  return j;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? s.size() - pos : comma - pos);
    out.push_back(Rational::parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Accepts a full antisymmetric nu, or (with --n) the positive D_M half.
HermitianParameter parse_parameter(const std::string& s, int n_hint) {
  auto vals = parse_rationals(s);
  if (n_hint > 0 && static_cast<int>(vals.size()) == n_hint / 2) {
    return HermitianParameter::from_x(n_hint, vals);
  }
  return HermitianParameter(std::move(vals));
}

// Tempered block data: segments listed left to right, consumed greedily so
// that each block receives exactly its size.
std::vector<Multisegment> split_tempered(const std::string& s, const std::vector<int>& sizes) {
  // token by token, keeping the given order (Multisegment::parse would sort)
  std::vector<Segment> segs;
  std::size_t pos = 0;
  std::string str = s;
  while (pos <= str.size()) {
    std::size_t semi = str.find(';', pos);
    std::string tok = str.substr(pos, semi == std::string::npos ? str.size() - pos : semi - pos);
    Multisegment one = Multisegment::parse(tok);
    segs.push_back(one.segments()[0]);
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  std::vector<Multisegment> out;
  std::size_t k = 0;
  for (int size : sizes) {
    std::vector<Segment> block;
    int got = 0;
    while (got < size) {
      if (k >= segs.size()) throw std::domain_error("tempered data shorter than blocks");
      got += segs[k].length;
      block.push_back(segs[k]);
      ++k;
    }
    if (got != size) throw std::domain_error("tempered data does not align with block sizes");
    out.emplace_back(std::move(block));
  }
  if (k != segs.size()) throw std::domain_error("tempered data longer than blocks");
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? s.size() - pos : comma - pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"signature characters of Hermitian representations of the GL_N graded Hecke algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool seedless = false;  // perturbations are always deterministic; reserved
  std::string mode_str = "conjectural";
  app.add_flag("--json", json, "emit JSON");
  app.add_flag("--seedless", seedless, "reserved; runs are always deterministic");
  app.add_option("--mode", mode_str, "proven|conjectural|oracle");

  // chartable
  auto* chartable = app.add_subcommand("chartable", "character table of S_N");
  chartable->fallthrough();
  int ct_n = 0;
  chartable->add_option("n", ct_n, "symmetric group size")->required();

  // kostka
  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka numbers");
  kostka_cmd->fallthrough();
  int ko_n = 0;
  std::string ko_lambda, ko_mu;
  kostka_cmd->add_option("--n", ko_n, "print the full matrix for partitions of n");
  kostka_cmd->add_option("--lambda", ko_lambda, "shape");
  kostka_cmd->add_option("--mu", ko_mu, "content");

  // zel
  auto* zel = app.add_subcommand("zel", "Zelevinsky (Moeglin-Waldspurger) dual");
  zel->fallthrough();
  std::string zel_mseg;
  zel->add_option("mseg", zel_mseg, "multisegment")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "BZ / KL / Langlands data and predicates");
  classify->fallthrough();
  std::string cl_mseg;
  classify->add_option("mseg", cl_mseg, "multisegment")->required();

  // sig
  auto* sig = app.add_subcommand("sig", "unramified signature character");
  sig->fallthrough();
  std::string sig_nu;
  int sig_n = 0;
  sig->add_option("--nu", sig_nu, "full antisymmetric nu, or D_M half with --n")->required();
  sig->add_option("--n", sig_n, "N when giving D_M coordinates");

  // infinity
  auto* infinity = app.add_subcommand("infinity", "signature at infinity");
  infinity->fallthrough();
  std::string inf_blocks, inf_tempered;
  infinity->add_option("--blocks", inf_blocks, "block sizes, e.g. 1,2,1")->required();
  infinity->add_option("--tempered", inf_tempered, "tempered data, e.g. [0];[-1/2,1/2];[0]")
      ->required();

  // sigma-nmr
  auto* sigma = app.add_subcommand("sigma-nmr", "family value Sigma^N(m,r)");
  sigma->fallthrough();
  int s_n = 0, s_m = 0, s_r = 0;
  sigma->add_option("N", s_n)->required();
  sigma->add_option("m", s_m)->required();
  sigma->add_option("r", s_r)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "intertwining-operator oracle");
  oracle->fallthrough();
  std::string or_nu, or_lambda;
  int or_n = 0;
  bool or_det = false;
  oracle->add_option("--nu", or_nu, "parameter")->required();
  oracle->add_option("--n", or_n, "N when giving D_M coordinates");
  oracle->add_option("--lambda", or_lambda, "restrict to one W-type");
  oracle->add_flag("--det-order", or_det, "also report the determinant vanishing order");

  // verify
  auto* verify = app.add_subcommand("verify", "verification batteries");
  verify->fallthrough();
  auto* vk = verify->add_subcommand("kostka-identity", "chi(w0) Kostka identity");
  int vk_max = 12;
  vk->add_option("--max-n", vk_max, "largest N");

  // paper-tables
  auto* tables = app.add_subcommand("paper-tables", "the GL_{2,3,4} signature tables");
  tables->fallthrough();
  int pt_n = 0;
  tables->add_option("--n", pt_n, "2, 3 or 4")->required();

  std::vector<const char*> argv;
  argv.push_back("sigchar");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Mode mode = Mode::allow_conjectures;
  try {
    mode = parse_mode(mode_str);
    if (*chartable) {
      check_cap(ct_n);
      const auto& all = partitions(ct_n);
      if (json) {
        ordered_json j;
        j["n"] = ct_n;
        ordered_json names = ordered_json::array();
        for (const auto& p : all) names.push_back(p.str_compact());
        j["partitions"] = names;
        ordered_json table = ordered_json::array();
        for (const auto& l : all) {
          ordered_json row = ordered_json::array();
          for (const auto& mu : all) row.push_back(character(l, mu));
          table.push_back(row);
        }
        j["table"] = table;
        out << j.dump(2) << "\n";
      } else {
        out << "chi_lambda(mu), lambda down, mu across; order: ";
        for (std::size_t i = 0; i < all.size(); ++i) {
          out << (i ? " " : "") << "(" << all[i].str_compact() << ")";
        }
        out << "\n";
        for (const auto& l : all) {
          out << "(" << l.str_compact() << ")";
          for (const auto& mu : all) out << "\t" << character(l, mu);
          out << "\n";
        }
      }
    } else if (*kostka_cmd) {
      if (!ko_lambda.empty()) {
        Partition l = Partition::parse(ko_lambda);
        Partition mu = Partition::parse(ko_mu);
        std::int64_t v = kostka(l, mu);
        if (json) {
          ordered_json j;
          j["lambda"] = l.str_compact();
          j["mu"] = mu.str_compact();
          j["kostka"] = v;
          out << j.dump(2) << "\n";
        } else {
          out << v << "\n";
        }
      } else if (ko_n > 0) {
        check_cap(ko_n);
        const auto& all = partitions(ko_n);
        for (const auto& l : all) {
          out << "(" << l.str_compact() << ")";
          for (const auto& mu : all) out << "\t" << kostka(l, mu);
          out << "\n";
        }
      } else {
        throw CLI::ValidationError("kostka: give --lambda/--mu or --n");
      }
    } else if (*zel) {
      Multisegment m = Multisegment::parse(zel_mseg);
      Multisegment dual = zelevinsky(m);
      if (json) {
        ordered_json j;
        j["input"] = m.str();
        j["dual"] = dual.str();
        out << j.dump(2) << "\n";
      } else {
        out << dual.str() << "\n";
      }
    } else if (*classify) {
      Multisegment m = Multisegment::parse(cl_mseg);
      KLDatum kl = bz_to_kl(m);
      LanglandsDatum l = kl_to_langlands(kl);
      ordered_json j;
      j["multisegment"] = m.str();
      ordered_json s = ordered_json::array();
      for (const auto& v : kl.s) s.push_back(v.str());
      j["s"] = s;
      j["e"] = kl.e.str_compact();
      j["block_sizes"] = l.block_sizes;
      ordered_json tp = ordered_json::array();
      for (const auto& u : l.tempered_parts) tp.push_back(u.str());
      j["tempered_parts"] = tp;
      ordered_json nu = ordered_json::array();
      for (const auto& v : l.nu) nu.push_back(v.str());
      j["nu"] = nu;
      j["flags"] = {{"tempered", is_tempered(m)},
                    {"unramified", is_unramified(m)},
                    {"hermitian", is_hermitian(m)},
                    {"unitary", is_unitary(m)},
                    {"irreducible_standard", is_irreducible_standard(m)}};
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << "multisegment: " << m.str() << "\n";
        out << "s: " << j["s"].dump() << "\ne: (" << kl.e.str_compact() << ")\n";
        out << "block sizes: " << j["block_sizes"].dump() << "\n";
        out << "tempered parts: " << j["tempered_parts"].dump() << "\n";
        out << "nu: " << j["nu"].dump() << "\n";
        out << "flags: " << j["flags"].dump() << "\n";
      }
    } else if (*sig) {
      HermitianParameter p = parse_parameter(sig_nu, sig_n);
      check_cap(p.N());
      SignatureCharacter s = signature_unramified(p, mode);
      if (json) {
        out << signature_payload(p.str(), s).dump(2) << "\n";
      } else {
        out << s.str() << "   [" << (s.conjectural() ? "conjectural" : "proven");
        for (const auto& u : s.conjecture_uses()) out << ", " << u;
        out << "]\n";
      }
    } else if (*infinity) {
      InfinityInput inp;
      inp.block_sizes = parse_ints(inf_blocks);
      auto parts = split_tempered(inf_tempered, inp.block_sizes);
      for (const auto& u : parts) {
        if (!is_tempered(u)) throw std::domain_error("infinity: block data must be tempered");
        inp.tempered_mults.push_back(standard_w_multiplicities(u));
      }
      check_cap(inp.N());
      SignatureCharacter s = sig_at_infinity(inp);
      if (json) {
        out << signature_payload(inf_blocks + " / " + inf_tempered, s).dump(2) << "\n";
      } else {
        out << s.str() << "\n";
      }
    } else if (*sigma) {
      check_cap(s_n);
      SignatureCharacter s = sigma_family(s_n, s_m, s_r);
      if (json) {
        out << signature_payload("Sigma^" + std::to_string(s_n) + "(" + std::to_string(s_m) +
                                     "," + std::to_string(s_r) + ")",
                                 s)
                   .dump(2)
            << "\n";
      } else {
        out << s.str() << "   [" << (s.conjectural() ? "conjectural" : "proven") << "]\n";
      }
    } else if (*oracle) {
      HermitianParameter p = parse_parameter(or_nu, or_n);
      check_cap(p.N());
      if (p.N() > 7) throw std::domain_error("oracle: N > 7 not supported");
      OperatorOnRegularModule A = build_A(p);
      ordered_json j;
      j["input"] = p.str();
      ordered_json counts = ordered_json::object();
      std::vector<Partition> lambdas;
      if (!or_lambda.empty()) {
        lambdas.push_back(Partition::parse(or_lambda));
      } else {
        lambdas = partitions(p.N());
      }
      for (const auto& l : lambdas) {
        IsotypicCounts c = isotypic_counts(A, l, p);
        counts[l.str_compact()] = {{"positive", c.positive},
                                   {"negative", c.negative},
                                   {"zero", c.zero},
                                   {"signature", c.signature() / dim_irrep(l)}};
        if (!json) {
          out << "(" << l.str_compact() << "): +" << c.positive << " -" << c.negative << " 0:"
              << c.zero << "  signature " << c.signature() / dim_irrep(l) << "\n";
        }
      }
      j["counts"] = counts;
      if (or_lambda.empty()) {
        SignatureCharacter s = oracle_signature(p);
        j["signature"] = signature_json(s);
        j["provenance"] = "proven";
        if (!json) out << "normalized: " << s.str() << "\n";
      }
      if (or_det) {
        std::vector<Rational> dir(p.N(), Rational(0));
        // deterministic generic direction: 1/P_k on the k-th folded coordinate
        const int primes[] = {2, 3, 5, 7, 11, 13};
        for (int i = 0; i < p.M(); ++i) {
          dir[i] = Rational(1, primes[i % 6]);
          dir[p.N() - 1 - i] = -dir[i];
        }
        int ord = det_order_check(p, dir);
        j["det_order"] = ord;
        if (!json) out << "det order: " << ord << "\n";
      }
      if (json) out << j.dump(2) << "\n";
    } else if (*verify) {
      if (*vk) {
        check_cap(vk_max);
        int total = 0;
        bool ok = true;
        for (int n = 1; n <= vk_max; ++n) {
          auto rep = kostka_identity_check(n);
          total += rep.checked;
          if (!rep.ok) {
            ok = false;
            for (const auto& v : rep.violations) err << "N=" << n << " " << v << "\n";
          }
        }
        if (json) {
          ordered_json j;
          j["identities"] = total;
          j["ok"] = ok;
          out << j.dump(2) << "\n";
        } else {
          out << (ok ? "OK: " : "FAILED: ") << total << " identities "
              << (ok ? "hold" : "checked") << "\n";
        }
        if (!ok) return 1;
      } else {
        throw CLI::ValidationError("verify: unknown battery");
      }
    } else if (*tables) {
      if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& res : verify_paper_table(pt_n, mode)) {
          ordered_json row;
          row["family"] = res.row->family;
          row["stratum"] = res.row->stratum;
          row["paper"] = signature_json(res.printed_value);
          row["paper_conjectural"] = res.row->printed_conjectural;
          row["computed"] = signature_json(res.computed);
          row["provenance"] = res.computed.conjectural() ? "conjectural" : "proven";
          row["conjecture_uses"] = res.computed.conjecture_uses();
          if (res.corrected) {
            row["erratum"] = res.row->erratum_note;
            row["corrected"] = signature_json(*res.corrected);
          }
          j.push_back(row);
        }
        out << j.dump(2) << "\n";
      } else {
        out << render_paper_table(pt_n);
      }
    }
  } catch (const ConjectureRequired& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sigchar::cli
