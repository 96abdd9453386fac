#include "alexmod/io.hpp"

#include <cctype>
#include <sstream>

namespace alexmod {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Reads the next non-blank line with comments removed; returns false at
// end of stream.  line_no counts physical lines.
bool next_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (!line.empty()) return true;
  }
  return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Int parse_int(const std::string& text, int line) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty integer", line);
  size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) throw ParseError("malformed integer '" + t + "'", line);
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("malformed integer '" + t + "'", line);
  return Int(t);
}

}  // namespace

ParseError::ParseError(const std::string& msg, int line_, int column_)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) +
                                         (column_ > 0 ? ", column " +
                                                            std::to_string(column_)
                                                      : "") +
                                         ": " + msg
                                   : msg),
      line(line_),
      column(column_) {}

Word parse_word(const std::string& text,
                const std::vector<std::string>& names) {
  std::string t = strip(text);
  if (t == "1") return Word{};
  if (t.empty()) throw ParseError("empty word (use '1' for the identity)");
  Word out;
  size_t pos = 0;
  for (;;) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
      ++pos;
    if (pos >= t.size() || !ident_start(t[pos]))
      throw ParseError("expected a generator name", 0,
                       static_cast<int>(pos + 1));
    size_t start = pos;
    while (pos < t.size() && ident_char(t[pos])) ++pos;
    std::string name = t.substr(start, pos - start);
    int gen = 0;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) gen = static_cast<int>(i + 1);
    if (gen == 0)
      throw ParseError("unknown generator '" + name + "'", 0,
                       static_cast<int>(start + 1));

    long exp = 1;
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
      ++pos;
    if (pos < t.size() && t[pos] == '^') {
      ++pos;
      while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
        ++pos;
      size_t estart = pos;
      if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
        ++pos;
      if (pos == estart || (pos == estart + 1 && !std::isdigit(static_cast<unsigned char>(t[estart]))))
        throw ParseError("malformed exponent", 0,
                         static_cast<int>(estart + 1));
      exp = std::stol(t.substr(estart, pos - estart));
      if (exp == 0)
        throw ParseError("zero exponent is not allowed", 0,
                         static_cast<int>(estart + 1));
      while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
        ++pos;
    }
    out = out * Word::generator(gen, exp);
    if (pos >= t.size()) break;
    if (t[pos] != '*')
      throw ParseError("expected '*' between terms", 0,
                       static_cast<int>(pos + 1));
    ++pos;
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.syllables().empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << "*";
    first = false;
    if (static_cast<size_t>(s.gen) <= names.size())
      os << names[s.gen - 1];
    else
      os << "x" << s.gen;
    if (s.exp != 1) os << "^" << s.exp;
  }
  return os.str();
}

GroupPresentation parse_presentation(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_line(in, line, line_no) || line.rfind("gens:", 0) != 0)
    throw ParseError("expected a 'gens:' line", line_no);
  std::vector<std::string> names;
  for (auto& piece : split(line.substr(5), ',')) {
    std::string n = strip(piece);
    if (n.empty()) throw ParseError("empty generator name", line_no);
    for (char c : n)
      if (!ident_char(c))
        throw ParseError("bad generator name '" + n + "'", line_no);
    for (const auto& seen : names)
      if (seen == n)
        throw ParseError("duplicate generator name '" + n + "'", line_no);
    names.push_back(n);
  }

  std::vector<Word> rels;
  while (next_line(in, line, line_no)) {
    std::string body = line;
    if (body.rfind("rels:", 0) == 0) body = body.substr(5);
    for (auto& piece : split(body, ';')) {
      std::string w = strip(piece);
      if (w.empty()) continue;
      try {
        rels.push_back(parse_word(w, names));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
  }
  int num_gens = static_cast<int>(names.size());
  return make_presentation(num_gens, std::move(rels), std::move(names));
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens: ";
  for (int i = 1; i <= p.num_generators; ++i)
    os << (i > 1 ? ", " : "") << p.name(i);
  os << "\nrels: ";
  std::vector<std::string> names;
  for (int i = 1; i <= p.num_generators; ++i) names.push_back(p.name(i));
  for (size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? "; " : "") << format_word(p.relators[i], names);
  os << "\n";
  return os.str();
}

AbelianGroup parse_abelian_group(const std::string& text) {
  std::string t = strip(text);
  AbelianGroup g;
  if (t == "0" || t == "1") return g;
  for (auto& piece : split(t, 'x')) {
    std::string f = strip(piece);
    if (f == "Z") {
      g.free_rank += 1;
    } else if (f.rfind("Z^", 0) == 0) {
      Int k = parse_int(f.substr(2), 0);
      if (k < 1 || !k.fits_sint_p())
        throw ParseError("bad free rank in '" + f + "'");
      g.free_rank += k.get_si();
    } else if (f.rfind("Z/", 0) == 0) {
      Int d = parse_int(f.substr(2), 0);
      if (d < 2) throw ParseError("torsion order must be >= 2 in '" + f + "'");
      g.torsion.push_back(d);
    } else {
      throw ParseError("bad group factor '" + f + "'");
    }
  }
  for (size_t i = 0; i + 1 < g.torsion.size(); ++i)
    if (g.torsion[i + 1] % g.torsion[i] != 0)
      throw ParseError("torsion orders must divide in sequence");
  return g;
}

AbelianElement parse_element(const std::string& text, const AbelianGroup& g) {
  std::string t = strip(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError("element must be parenthesized: " + t);
  t = t.substr(1, t.size() - 2);

  auto parse_list = [&](const std::string& s) {
    std::vector<Int> out;
    if (strip(s).empty()) return out;
    for (auto& piece : split(s, ',')) out.push_back(parse_int(piece, 0));
    return out;
  };

  std::vector<Int> free_part, torsion_part;
  size_t semi = t.find(';');
  if (semi != std::string::npos) {
    free_part = parse_list(t.substr(0, semi));
    torsion_part = parse_list(t.substr(semi + 1));
  } else if (g.free_rank == 0) {
    torsion_part = parse_list(t);
  } else if (g.torsion.empty()) {
    free_part = parse_list(t);
  } else {
    throw ParseError("mixed group needs ';' between free and torsion parts");
  }
  if (free_part.size() != static_cast<size_t>(g.free_rank) ||
      torsion_part.size() != g.torsion.size())
    throw ParseError("element shape does not match " + g.str());
  AbelianElement e{std::move(free_part), std::move(torsion_part)};
  return ab_normalize(g, std::move(e));
}

AbelianHom parse_hom(std::istream& in, const GroupPresentation& p) {
  std::string line;
  int line_no = 0;
  if (!next_line(in, line, line_no) || line.rfind("target:", 0) != 0)
    throw ParseError("expected a 'target:' line", line_no);
  AbelianGroup target;
  try {
    target = parse_abelian_group(line.substr(7));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no);
  }

  std::vector<AbelianElement> images(p.num_generators, ab_zero(target));
  std::vector<bool> seen(p.num_generators, false);
  while (next_line(in, line, line_no)) {
    size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ParseError("expected 'name -> (element)'", line_no);
    std::string name = strip(line.substr(0, arrow));
    int gen = 0;
    for (int i = 1; i <= p.num_generators; ++i)
      if (p.name(i) == name) gen = i;
    if (gen == 0)
      throw ParseError("unknown generator '" + name + "'", line_no);
    if (seen[gen - 1])
      throw ParseError("duplicate image for '" + name + "'", line_no);
    seen[gen - 1] = true;
    try {
      images[gen - 1] = parse_element(line.substr(arrow + 2), target);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  for (int i = 0; i < p.num_generators; ++i)
    if (!seen[i])
      throw ParseError("missing image for generator '" + p.name(i + 1) + "'");
  return validate_hom(p, std::move(images), target);
}

C2Chain parse_chain(std::istream& in) {
  std::string line;
  int line_no = 0;
  AbelianGroup a, b, c;
  std::vector<AbelianElement> incl_imgs, proj_imgs;
  bool have_a = false, have_b = false, have_c = false, have_incl = false,
       have_proj = false;

  auto parse_elements = [&](const std::string& body, const AbelianGroup& g) {
    std::vector<AbelianElement> out;
    size_t pos = 0;
    while ((pos = body.find('(', pos)) != std::string::npos) {
      size_t close = body.find(')', pos);
      if (close == std::string::npos)
        throw ParseError("unclosed '('", line_no);
      out.push_back(parse_element(body.substr(pos, close - pos + 1), g));
      pos = close + 1;
    }
    return out;
  };

  while (next_line(in, line, line_no)) {
    try {
      if (line.rfind("A:", 0) == 0) {
        a = parse_abelian_group(line.substr(2));
        have_a = true;
      } else if (line.rfind("B:", 0) == 0) {
        b = parse_abelian_group(line.substr(2));
        have_b = true;
      } else if (line.rfind("C:", 0) == 0) {
        c = parse_abelian_group(line.substr(2));
        have_c = true;
      } else if (line.rfind("incl:", 0) == 0) {
        if (!have_b) throw ParseError("'incl:' before 'B:'", line_no);
        incl_imgs = parse_elements(line.substr(5), b);
        have_incl = true;
      } else if (line.rfind("proj:", 0) == 0) {
        if (!have_c) throw ParseError("'proj:' before 'C:'", line_no);
        proj_imgs = parse_elements(line.substr(5), c);
        have_proj = true;
      } else {
        throw ParseError("unrecognized line '" + line + "'", line_no);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!(have_a && have_b && have_c && have_incl && have_proj))
    throw ParseError("chain file needs A:, B:, C:, incl: and proj: lines");
  try {
    return C2Chain{make_ab_hom(a, b, std::move(incl_imgs)),
                   make_ab_hom(b, c, std::move(proj_imgs))};
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

IntMatrix parse_matrix(std::istream& in) {
  int rows, cols;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw ParseError("expected 'rows cols' header");
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix entries exhausted early");
      m.at(i, j) = parse_int(tok, 0);
    }
  return m;
}

}  // namespace alexmod
