#include "ihoml/printer.hpp"

#include <sstream>
#include <stdexcept>

namespace ihoml {

namespace {

// Precedence: mequ/<-> (1) < mimp/-> (2) < mor/| (3) < mand/& (4)
// < prefix (5) < application (6) < atom (7).
int level_of(Kind k) {
  switch (k) {
    case Kind::MEqu: case Kind::Iff: return 1;
    case Kind::MImp: case Kind::Imp: return 2;
    case Kind::MOr: case Kind::Or: return 3;
    case Kind::MAnd: case Kind::And: return 4;
    case Kind::MNot: case Kind::Not: case Kind::Box: case Kind::Dia: return 5;
    case Kind::App: return 6;
    default: return 7;
  }
}

void print(std::ostream& os, const Term& t, int min_level, bool right_edge);

void print_binary(std::ostream& os, const Term& t, const char* op, int min_level,
                  bool right_edge) {
  const int lv = level_of(t.kind);
  const bool right_assoc = t.kind == Kind::MImp || t.kind == Kind::Imp;
  const bool parens = lv < min_level;
  if (parens) os << "(";
  print(os, *t.a, right_assoc ? lv + 1 : lv, false);
  os << " " << op << " ";
  print(os, *t.b, right_assoc ? lv : lv + 1, parens || right_edge);
  if (parens) os << ")";
}

void print_call(std::ostream& os, const char* head, const Term& a, const Term* b) {
  os << head << "(";
  print(os, a, 1, true);
  if (b) {
    os << ", ";
    print(os, *b, 1, true);
  }
  os << ")";
}

void print(std::ostream& os, const Term& t, int min_level, bool right_edge) {
  switch (t.kind) {
    case Kind::Var:
    case Kind::Sym:
      os << t.name;
      return;
    case Kind::Lit:
      if (t.lit.type() == Type::tru()) {
        os << (t.lit.as_truth() ? "true" : "false");
        return;
      }
      throw std::logic_error("literal value has no surface syntax");
    case Kind::MFalse: os << "mfalse"; return;
    case Kind::MTrue: os << "mtrue"; return;
    case Kind::Lam:
    case Kind::Forall: case Kind::Exists:
    case Kind::ForallP: case Kind::ExistsP:
    case Kind::ForallE: case Kind::ExistsE: {
      const bool parens = !right_edge;
      if (parens) os << "(";
      switch (t.kind) {
        case Kind::Lam: os << "lam " << t.name << ":" << t.ann.str(); break;
        case Kind::Forall: os << "! " << t.name << ":" << t.ann.str(); break;
        case Kind::Exists: os << "? " << t.name << ":" << t.ann.str(); break;
        case Kind::ForallP: os << "forall " << t.name << ":" << t.ann.str(); break;
        case Kind::ExistsP: os << "exists " << t.name << ":" << t.ann.str(); break;
        case Kind::ForallE: os << "forallE " << t.name; break;
        default: os << "existsE " << t.name; break;
      }
      os << ". ";
      print(os, *t.a, 1, true);
      if (parens) os << ")";
      return;
    }
    case Kind::App: {
      const bool parens = 6 < min_level;
      if (parens) os << "(";
      print(os, *t.a, 6, false);
      os << " ";
      print(os, *t.b, 7, false);
      if (parens) os << ")";
      return;
    }
    case Kind::Not: case Kind::MNot: case Kind::Box: case Kind::Dia: {
      const bool parens = 5 < min_level;
      if (parens) os << "(";
      os << (t.kind == Kind::Not ? "~" : kind_name(t.kind))
         << (t.kind == Kind::Not ? "" : " ");
      print(os, *t.a, 5, parens || right_edge);
      if (parens) os << ")";
      return;
    }
    case Kind::And: print_binary(os, t, "&", min_level, right_edge); return;
    case Kind::Or: print_binary(os, t, "|", min_level, right_edge); return;
    case Kind::Imp: print_binary(os, t, "->", min_level, right_edge); return;
    case Kind::Iff: print_binary(os, t, "<->", min_level, right_edge); return;
    case Kind::MAnd: print_binary(os, t, "mand", min_level, right_edge); return;
    case Kind::MOr: print_binary(os, t, "mor", min_level, right_edge); return;
    case Kind::MImp: print_binary(os, t, "mimp", min_level, right_edge); return;
    case Kind::MEqu: print_binary(os, t, "mequ", min_level, right_edge); return;
    case Kind::NegExt: print_call(os, "negd", *t.a, nullptr); return;
    case Kind::NegInt: print_call(os, "negg", *t.a, nullptr); return;
    case Kind::Rigid: print_call(os, "rigid", *t.a, nullptr); return;
    case Kind::Down: print_call(os, "down", *t.a, t.b.get()); return;
    case Kind::DownBold: print_call(os, "downb", *t.a, t.b.get()); return;
    case Kind::Down1: print_call(os, "down1", *t.a, t.b.get()); return;
    case Kind::Valid:
      os << "valid[";
      print(os, *t.a, 1, true);
      os << "]";
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  print(os, t, 1, true);
  return os.str();
}

std::string print_term(const TermPtr& t) { return print_term(*t); }

}  // namespace ihoml
