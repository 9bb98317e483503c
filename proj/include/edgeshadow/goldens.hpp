#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeshadow/shadow_recursion.hpp"

namespace edgeshadow {

/// One reference table entry in canonical form.
struct GoldenEntry {
    GeometryName geometry;
    Kind kind;
    int h;
    int j;
    int f;
    TrigPoly poly;
    std::string source;  // table label, e.g. "crack/primal"

    ShadowKey key() const { return {kind, h, j, f}; }
    GoldenEntry() : geometry(GeometryName::Crack), kind(Kind::Primal), h(0), j(1), f(0), poly(2) {}
};

struct Mismatch {
    GeometryName geometry;
    ShadowKey key;
    std::optional<TrigPoly> expected;  // absent: entry missing from corpus side
    std::optional<TrigPoly> actual;    // absent: entry missing from the table
    std::string first_diff;            // human-readable first differing term
};

struct VerifyReport {
    std::size_t total = 0;
    std::size_t matched = 0;
    std::vector<Mismatch> mismatches;
    std::size_t mismatched() const { return mismatches.size(); }
    bool ok() const { return mismatches.empty(); }
};

/// Parses a single DSL entry:
///   [<geom> <kind> j=<int> h=<int> f=<int>]
///   <coeff> (sin|cos) <num>/<den> { ; <coeff> (sin|cos) <num>/<den> }
/// with <coeff> ::= <rat>[(+|-)<rat>r3], or a bare "0" for the empty
/// polynomial. Whitespace-insensitive; "#" starts a line comment.
/// Throws ParseError with line/column and the expected token.
GoldenEntry parse_entry(std::string_view text, std::string_view source = {});

/// Parses a whole corpus document (any number of entries).
std::vector<GoldenEntry> parse_corpus(std::string_view text, std::string_view source = {});

enum class EmitFormat { Dsl, Latex, Json };

/// Emission. DSL output round-trips through parse_entry to an equal entry;
/// terms are listed by ascending frequency, sines before cosines.
std::string emit_entry(const GoldenEntry& e, EmitFormat format);

/// Exact structural comparison of a generated table against corpus entries
/// for the table's geometry. Missing table keys are reported as mismatches,
/// never thrown.
VerifyReport verify(const ShadowTable& table, std::span<const GoldenEntry> corpus);

/// The embedded reference corpus (all four table families).
const std::vector<GoldenEntry>& embedded_corpus();

/// Raw DSL text of the embedded corpus, keyed by family label:
/// "crack_primal", "crack_dual", "vnotch90_primal", "vnotch90_dual".
std::span<const std::pair<std::string_view, std::string_view>> embedded_corpus_documents();

/// Loads every "*.dsl" file in a directory (the SHADOW_GOLDEN_DIR / --golden
/// override); entries keep the file name as their source label.
std::vector<GoldenEntry> load_corpus_dir(const std::string& dir);

/// Corpus entries retained verbatim from the source tables although they are
/// provably inconsistent with the defining equations (a sign typo, or a
/// missing homogeneous boundary-closure pair, or a value propagated from such
/// an entry through the recursion couplings). Excluded from exact-match
/// checks; docs/errata.md carries the analysis.
struct CorpusErratum {
    GeometryName geometry;
    ShadowKey key;
    std::string note;
};
std::span<const CorpusErratum> corpus_errata();
bool is_corpus_erratum(GeometryName g, const ShadowKey& key);

}  // namespace edgeshadow
