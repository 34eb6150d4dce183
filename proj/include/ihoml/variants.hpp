#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihoml/typecheck.hpp"
#include "ihoml/ultrafilter.hpp"

namespace ihoml {

// One line of a variant's axiom box: either a definition (an abbreviation
// that gets inlined before checking) or a postulate that models must
// satisfy. Terms are stored unexpanded, referencing the defined symbols.
struct CatalogEntry {
  enum class EntryKind { Definition, Postulate };
  EntryKind kind;
  std::string name;    // display name, e.g. "df.G", "A1a", "T2"
  std::string symbol;  // definitions only: the symbol being defined
  TermPtr term;
};

// A goal family parameterized by a carrier element; instances are closed
// s-typed terms with the parameter plugged in as a literal.
struct Schema {
  std::string name;
  Type param;
  std::function<TermPtr(const Value&)> instance;
};

// A named goal: either a single closed (expanded) s-typed term or a schema.
struct Goal {
  std::string name;
  TermPtr closed;  // null for schema goals
  std::optional<Schema> schema;

  bool is_schema() const { return schema.has_value(); }
  TermPtr instance_term(const std::optional<Value>& param) const {
    return is_schema() ? schema->instance(*param) : closed;
  }
};

struct VariantSpec {
  std::string name;
  Signature signature;                // the free symbols, P only
  std::vector<CatalogEntry> entries;  // figure order, definitions interleaved
  std::map<std::string, Goal> goals;

  // signature plus defined symbols plus r/existsAt, for typechecking the
  // unexpanded catalog
  Signature full_signature() const;

  // inlines all definitions; result is closed over `signature`
  TermPtr expand(TermPtr t) const;

  // postulates to check at the given domain sizes, cheap ones first. When
  // the A3 quantifier carrier exceeds the cap, A3 is replaced by directly
  // postulating T2; *mode records which of the two ran.
  std::vector<std::pair<std::string, TermPtr>> check_axioms(int entities, int worlds,
                                                            uint64_t cap,
                                                            std::string* mode = nullptr) const;
};

// Exact axiom catalogs of the three variants.
VariantSpec build_variant(const std::string& name);

// P' = lam phi:g. downb(P, phi): properties whose rigidly intensionalized
// extensions are positive. NotApplicable for fitting, whose P is already
// extensional.
TermPtr mk_P_prime(const VariantSpec& v);

// Modal collapse as a schema family over the sigma carrier.
Schema mk_modal_collapse();

enum class BarcanDirection { BF, CBF };
enum class QuantFlavor { EntActualist, GammaPossibilist };

// Barcan / converse Barcan schema; the parameter ranges over g for the
// actualist entity form and over g>s for the possibilist gamma form.
Schema mk_barcan(QuantFlavor flavor, BarcanDirection dir);

// De dicto / de re readings of T3, T5, T6 (fitting only; NotApplicable
// otherwise). `goal` is "T3", "T5" or "T6".
TermPtr mk_de_dicto(const VariantSpec& v, const std::string& goal);
TermPtr mk_de_re(const VariantSpec& v, const std::string& goal);

// Axiom catalog as DSL text, one entry per line (golden file format).
std::string export_catalog(const VariantSpec& v);

}  // namespace ihoml
