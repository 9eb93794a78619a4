#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigchar/sigengine.hpp"
#include "sigchar/signature_character.hpp"

namespace sigchar {

// One row of the GL_N signature tables (N = 2, 3, 4): a Langlands family,
// a parameter stratum, the printed value, and how to recompute it.
struct TableRow {
  int N;
  std::string family;   // e.g. "S=(1,1,1,1)"
  std::string stratum;  // e.g. "nu_2 = 1/2 < nu_1 < 3/2"
  std::string sample;   // multisegment at a representative parameter
  enum class Route {
    engine,      // sig_hermitian / signature_unramified at the sample
    dual_twist,  // sgn-twist of the engine value at the Zelevinsky dual
  } route;
  std::vector<std::pair<std::string, std::int64_t>> printed;  // table entry
  bool printed_conjectural;  // the table's "?=" flag
  std::optional<std::vector<std::pair<std::string, std::int64_t>>> corrected;
  std::string erratum_note;  // nonempty iff corrected is set
};

const std::vector<TableRow>& paper_table_rows(int N);

struct TableRowResult {
  const TableRow* row;
  SignatureCharacter printed_value;             // as tabulated
  std::optional<SignatureCharacter> corrected;  // as tabulated, when erratum
  SignatureCharacter computed;
  bool value_matches;    // computed == corrected.value_or(printed)
  bool provenance_ok;    // computed conjectural implies the table gated it "?="
  bool engine_stronger;  // table gated "?=" but the computed route is proven
};

SignatureCharacter row_signature(const TableRow& row, Mode mode);
std::vector<TableRowResult> verify_paper_table(int N, Mode mode);

// Deterministic text rendering of the table with computed values, errata
// shown inline next to the printed entries.
std::string render_paper_table(int N);

}  // namespace sigchar
