#include "sigchar/paper_tables.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "sigchar/classification.hpp"

namespace sigchar {

namespace {

using Coeffs = std::vector<std::pair<std::string, std::int64_t>>;

SignatureCharacter from_pairs(int N, const Coeffs& pairs, Provenance prov) {
  std::vector<std::int64_t> coeffs(partitions(N).size(), 0);
  for (const auto& [part, c] : pairs) {
    coeffs[partition_index(Partition::parse(part))] = c;
  }
  return SignatureCharacter(N, std::move(coeffs), prov);
}

std::vector<TableRow> make_rows(int N) {
  using R = TableRow::Route;
  std::vector<TableRow> rows;
  auto add = [&](std::string family, std::string stratum, std::string sample, R route,
                 Coeffs printed, bool conj, std::optional<Coeffs> corrected = std::nullopt,
                 std::string note = "") {
    rows.push_back(TableRow{N, std::move(family), std::move(stratum), std::move(sample), route,
                            std::move(printed), conj, std::move(corrected), std::move(note)});
  };

  if (N == 2) {
    add("S=(2), U=([-1/2,1/2])", "nu = 0", "[-1/2,1/2]", R::engine, {{"1^2", 1}}, false);
    add("S=(2), U=(0,0)", "nu = 0", "0;0", R::engine, {{"1^2", 1}, {"2", 1}}, false);
    add("S=(1,1)", "nu_1 < 1/2", "1/4;-1/4", R::engine, {{"1^2", 1}, {"2", 1}}, false);
    add("S=(1,1)", "nu_1 = 1/2", "1/2;-1/2", R::engine, {{"2", 1}}, false);
    add("S=(1,1)", "nu_1 > 1/2", "3/4;-3/4", R::engine, {{"1^2", -1}, {"2", 1}}, false);
  } else if (N == 3) {
    add("S=(3), U=([-1,0,1])", "nu = 0", "[-1,0,1]", R::engine, {{"1^3", 1}}, false);
    add("S=(3), U=([-1/2,1/2],0)", "nu = 0", "[-1/2,1/2];0", R::engine,
        {{"1^3", 1}, {"2,1", 1}}, false);
    add("S=(3), U=(0,0,0)", "nu = 0", "0;0;0", R::engine,
        {{"1^3", 1}, {"2,1", 1}, {"3", 1}}, false,
        Coeffs{{"1^3", 1}, {"2,1", 2}, {"3", 1}},
        "unitary tempered signature is the W-multiplicity vector of C[W]; the "
        "(2,1) coefficient is K_{(2,1),(1^3)} = 2 (parity), as in the N=4 analog");
    add("S=(1,1,1)", "nu_1 < 1/2", "1/4;0;-1/4", R::engine,
        {{"1^3", 1}, {"2,1", 2}, {"3", 1}}, false);
    add("S=(1,1,1)", "nu_1 = 1/2", "1/2;0;-1/2", R::engine, {{"2,1", 1}, {"3", 1}}, false);
    add("S=(1,1,1)", "1/2 < nu_1 < 1", "3/4;0;-3/4", R::engine,
        {{"1^3", -1}, {"3", 1}}, false);
    add("S=(1,1,1)", "nu_1 = 1", "1;0;-1", R::engine, {{"3", 1}}, false);
    add("S=(1,1,1)", "nu_1 > 1", "3/2;0;-3/2", R::engine, {{"1^3", 1}, {"3", 1}}, false,
        Coeffs{{"1^3", -1}, {"3", 1}},
        "sigma_inf = chi(w0) and height-two transparency force -(1^3)+0(2,1)+(3)");
  } else if (N == 4) {
    add("S=(4), U=([-3/2,-1/2,1/2,3/2])", "nu = 0", "[-3/2,-1/2,1/2,3/2]", R::engine,
        {{"1^4", 1}}, false);
    add("S=(4), U=([-1,0,1],0)", "nu = 0", "[-1,0,1];0", R::engine,
        {{"1^4", 1}, {"2,1^2", 1}}, false);
    add("S=(4), U=([-1/2,1/2],[-1/2,1/2])", "nu = 0", "[-1/2,1/2];[-1/2,1/2]", R::engine,
        {{"1^4", 1}, {"2,1^2", 1}, {"2^2", 1}}, false);
    add("S=(4), U=([-1/2,1/2],0,0)", "nu = 0", "[-1/2,1/2];0;0", R::engine,
        {{"1^4", 1}, {"2,1^2", 2}, {"2^2", 1}, {"3,1", 1}}, false);
    add("S=(4), U=(0,0,0,0)", "nu = 0", "0;0;0;0", R::engine,
        {{"1^4", 1}, {"2,1^2", 3}, {"2^2", 2}, {"3,1", 3}, {"4", 1}}, false);

    add("S=(2,2), U=([-1/2,1/2])x2", "nu_1 < 1/2", "[-1/4,3/4];[-3/4,1/4]", R::engine,
        {{"1^4", 1}, {"2,1^2", 1}, {"2^2", 1}}, false);
    add("S=(2,2), U=([-1/2,1/2])x2", "nu_1 = 1/2", "[0,1];[-1,0]", R::engine, {{"2^2", 1}},
        true);
    add("S=(2,2), U=([-1/2,1/2])x2", "1/2 < nu_1 < 1", "[1/4,5/4];[-5/4,-1/4]", R::engine,
        {{"1^4", -1}, {"2,1^2", -1}, {"2^2", 1}}, true);
    add("S=(2,2), U=([-1/2,1/2])x2", "nu_1 = 1", "[1/2,3/2];[-3/2,-1/2]", R::engine,
        {{"2,1^2", -1}, {"2^2", 1}}, true);
    add("S=(2,2), U=([-1/2,1/2])x2", "nu_1 > 1", "[1,2];[-2,-1]", R::engine,
        {{"1^4", 1}, {"2,1^2", -1}, {"2^2", 1}}, false);

    add("S=(2,2), U=(0,0)x2", "nu_1 < 1/2", "1/4;1/4;-1/4;-1/4", R::engine,
        {{"1^4", 1}, {"2,1^2", 3}, {"2^2", 2}, {"3,1", 3}, {"4", 1}}, false);
    add("S=(2,2), U=(0,0)x2", "nu_1 = 1/2", "1/2;1/2;-1/2;-1/2", R::engine,
        {{"2^2", 1}, {"3,1", 1}, {"4", 1}}, false);
    add("S=(2,2), U=(0,0)x2", "nu_1 > 1/2", "1;1;-1;-1", R::engine,
        {{"1^4", 1}, {"2,1^2", -1}, {"2^2", 2}, {"3,1", -1}, {"4", 1}}, false);

    add("S=(1,2,1), U=(0)x([-1/2,1/2])x(0)", "nu_1 < 1/2", "1/4;[-1/2,1/2];-1/4", R::engine,
        {{"1^4", 1}, {"2,1^2", 2}, {"2^2", 1}, {"3,1", 1}}, false);
    add("S=(1,2,1), U=(0)x([-1/2,1/2])x(0)", "nu_1 = 1/2", "1/2;[-1/2,1/2];-1/2", R::engine,
        {{"2,1^2", 1}, {"3,1", 1}}, true);
    add("S=(1,2,1), U=(0)x([-1/2,1/2])x(0)", "1/2 < nu_1 < 3/2", "1;[-1/2,1/2];-1",
        R::engine, {{"1^4", -1}, {"2^2", -1}, {"3,1", 1}}, true);
    add("S=(1,2,1), U=(0)x([-1/2,1/2])x(0)", "nu_1 = 3/2", "3/2;[-1/2,1/2];-3/2",
        R::dual_twist, {{"2^2", 1}, {"3,1", -1}}, true);
    add("S=(1,2,1), U=(0)x([-1/2,1/2])x(0)", "nu_1 > 3/2", "2;[-1/2,1/2];-2", R::engine,
        {{"1^4", -1}, {"2^2", -1}, {"3,1", 1}}, false);

    add("S=(1,2,1), U=(0)x(0,0)x(0)", "nu_1 < 1/2", "1/4;0;0;-1/4", R::engine,
        {{"1^4", 1}, {"2,1^2", 3}, {"2^2", 2}, {"3,1", 3}, {"4", 1}}, false);
    add("S=(1,2,1), U=(0)x(0,0)x(0)", "nu_1 = 1/2", "1/2;0;0;-1/2", R::engine,
        {{"2,1^2", 1}, {"2^2", 1}, {"3,1", 2}, {"4", 1}}, true);
    add("S=(1,2,1), U=(0)x(0,0)x(0)", "1/2 < nu_1 < 1", "3/4;0;0;-3/4", R::engine,
        {{"1^4", -1}, {"2,1^2", -1}, {"3,1", 1}, {"4", 1}}, true);
    add("S=(1,2,1), U=(0)x(0,0)x(0)", "nu_1 = 1", "1;0;0;-1", R::engine,
        {{"3,1", 1}, {"4", 1}}, false);
    add("S=(1,2,1), U=(0)x(0,0)x(0)", "nu_1 > 1", "3/2;0;0;-3/2", R::engine,
        {{"1^4", -1}, {"2,1^2", -1}, {"3,1", 1}, {"4", 1}}, false);

    add("S=(1,1,1,1)", "nu_2 < nu_1 < 1/2", "2/5;1/5;-1/5;-2/5", R::engine,
        {{"1^4", 1}, {"2,1^2", 3}, {"2^2", 2}, {"3,1", 3}, {"4", 1}}, false);
    add("S=(1,1,1,1)", "nu_2 < 1/2 < nu_1", "4/5;1/10;-1/10;-4/5", R::engine,
        {{"1^4", -1}, {"2,1^2", -1}, {"3,1", 1}, {"4", 1}}, false);
    add("S=(1,1,1,1)", "1/2 < nu_2 < nu_1", "9/10;7/10;-7/10;-9/10", R::engine,
        {{"1^4", 1}, {"2,1^2", -1}, {"2^2", 2}, {"3,1", -1}, {"4", 1}}, false);
    add("S=(1,1,1,1)", "nu_2 < nu_1 = 1/2", "1/2;1/5;-1/5;-1/2", R::engine,
        {{"2,1^2", 1}, {"2^2", 1}, {"3,1", 2}, {"4", 1}}, false);
    add("S=(1,1,1,1)", "nu_2 = 1/2 < nu_1 < 3/2", "1;1/2;-1/2;-1", R::engine,
        {{"2^2", 1}, {"4", 1}}, false,
        Coeffs{{"2,1^2", -1}, {"2^2", 1}, {"4", 1}},
        "averaging the flanking chambers forces an odd (2,1^2) coefficient");
    add("S=(1,1,1,1)", "nu_2 = 1/2, nu_1 > 3/2", "2;1/2;-1/2;-2", R::engine,
        {{"2^2", 1}, {"4", 1}}, false,
        Coeffs{{"2,1^2", -1}, {"2^2", 1}, {"4", 1}},
        "averaging the flanking chambers forces an odd (2,1^2) coefficient");
    add("S=(1,1,1,1)", "nu_2 = 1 - nu_1 < 1/2", "7/10;3/10;-3/10;-7/10", R::engine,
        {{"2^2", 1}, {"3,1", 1}, {"4", 1}}, false);
    add("S=(1,1,1,1)", "nu_2 = nu_1 - 1 < 1/2", "13/10;3/10;-3/10;-13/10", R::engine,
        {{"2^2", -1}, {"3,1", 1}, {"4", 1}}, true);
    add("S=(1,1,1,1)", "nu_2 = nu_1 - 1 > 1/2", "8/5;3/5;-3/5;-8/5", R::engine,
        {{"2^2", 1}, {"3,1", -1}, {"4", 1}}, false);
    add("S=(1,1,1,1)", "nu = (3/2,1/2,-1/2,-3/2)", "3/2;1/2;-1/2;-3/2", R::engine,
        {{"4", 1}}, false);
  } else {
    throw std::domain_error("paper_table_rows: tables exist for N = 2, 3, 4");
  }
  return rows;
}

}  // namespace

const std::vector<TableRow>& paper_table_rows(int N) {
  static const std::vector<TableRow> t2 = make_rows(2);
  static const std::vector<TableRow> t3 = make_rows(3);
  static const std::vector<TableRow> t4 = make_rows(4);
  switch (N) {
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default: throw std::domain_error("paper_table_rows: tables exist for N = 2, 3, 4");
  }
}

SignatureCharacter row_signature(const TableRow& row, Mode mode) {
  Multisegment m = Multisegment::parse(row.sample);
  if (row.route == TableRow::Route::dual_twist) {
    // The table computes these entries through the Zelevinsky involution and
    // prints the twisted representative without renormalizing.
    return sgn_twist(sig_hermitian(zelevinsky(m), mode));
  }
  if (is_unramified(m)) {
    std::vector<Rational> nu;
    for (const auto& s : m.segments()) nu.push_back(s.start);
    return signature_unramified(HermitianParameter(std::move(nu)), mode);
  }
  return sig_hermitian(m, mode);
}

std::vector<TableRowResult> verify_paper_table(int N, Mode mode) {
  std::vector<TableRowResult> out;
  for (const auto& row : paper_table_rows(N)) {
    TableRowResult res{&row,
                       from_pairs(N, row.printed,
                                  row.printed_conjectural ? Provenance::conjectural
                                                          : Provenance::proven),
                       std::nullopt,
                       SignatureCharacter::zero(N),
                       false,
                       false,
                       false};
    if (row.corrected) {
      res.corrected = from_pairs(N, *row.corrected, Provenance::proven);
    }
    res.computed = row_signature(row, mode);
    const SignatureCharacter& want = res.corrected ? *res.corrected : res.printed_value;
    res.value_matches = res.computed == want;
    res.provenance_ok = !res.computed.conjectural() || row.printed_conjectural;
    res.engine_stronger = row.printed_conjectural && !res.computed.conjectural();
    out.push_back(std::move(res));
  }
  return out;
}

std::string render_paper_table(int N) {
  std::ostringstream os;
  os << "Signature characters for GL_" << N << "\n";
  std::string family;
  for (const auto& res : verify_paper_table(N, Mode::allow_conjectures)) {
    const TableRow& row = *res.row;
    if (row.family != family) {
      family = row.family;
      os << "\n" << family << "\n";
    }
    os << "  " << row.stratum << ": ";
    os << (row.printed_conjectural ? "?= " : "= ") << res.printed_value.str();
    if (res.corrected) {
      os << "   [erratum: computed " << res.computed.str() << "; " << row.erratum_note << "]";
    } else if (!res.value_matches) {
      os << "   [MISMATCH: computed " << res.computed.str() << "]";
    }
    os << "   {" << (res.computed.conjectural() ? "conjectural" : "proven");
    for (const auto& u : res.computed.conjecture_uses()) os << ", " << u;
    os << "}";
    if (res.engine_stronger) os << " [proven here: the gated value follows from the unitarity criterion]";
    os << "\n";
  }
  return os.str();
}

}  // namespace sigchar
