#include "koszul/ringfile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace koszul {

namespace {

// a key's value, concatenated across continuation lines but still locatable
struct Located {
  std::string text;
  // (offset in text, source line, source column), one anchor per segment
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> anchors;

  void append(const std::string& s, std::size_t line, std::size_t col) {
    if (!text.empty()) text += ' ';
    anchors.emplace_back(text.size(), line, col);
    text += s;
  }
  std::pair<std::size_t, std::size_t> locate(std::size_t off) const {
    std::size_t line = 1, col = 1;
    for (const auto& [start, l, c] : anchors) {
      if (start > off) break;
      line = l;
      col = c + (off - start);
    }
    return {line, col + 1};  // columns reported 1-based
  }
};

struct KeyValue {
  std::string key;
  Located value;
  std::size_t line = 0;
};

bool is_key_line(const std::string& s, std::string& key, std::size_t& rest) {
  std::size_t i = 0;
  while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '-'))
    ++i;
  if (i == 0 || i >= s.size() || s[i] != ':') return false;
  key = s.substr(0, i);
  rest = i + 1;
  return true;
}

// split on sep, keeping per-chunk location info
std::vector<Located> split_located(const Located& v, char sep) {
  std::vector<Located> out;
  Located cur;
  std::size_t chunk_start = 0;
  auto flush = [&](std::size_t end) {
    auto [line, col] = v.locate(chunk_start);
    Located piece;
    piece.text = v.text.substr(chunk_start, end - chunk_start);
    piece.anchors.emplace_back(0, line, col - 1);
    // carry later anchors falling inside the chunk
    for (const auto& [start, l, c] : v.anchors)
      if (start > chunk_start && start < end)
        piece.anchors.emplace_back(start - chunk_start, l, c);
    out.push_back(std::move(piece));
    chunk_start = end + 1;
  };
  for (std::size_t i = 0; i < v.text.size(); ++i)
    if (v.text[i] == sep) flush(i);
  flush(v.text.size());
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Polynomial parse_poly_chunk(const RingPtr& ring, const Located& chunk) {
  std::string body = trimmed(chunk.text);
  if (body.empty()) {
    auto [line, col] = chunk.locate(0);
    throw RingFileError("empty polynomial", line, col);
  }
  try {
    return parse_polynomial(ring, chunk.text);
  } catch (const ParseError& e) {
    auto [line, col] = chunk.locate(e.pos);
    throw RingFileError(e.what(), line, col);
  }
}

}  // namespace

RingFile parse_ring_file(const std::string& text) {
  std::vector<KeyValue> entries;
  {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    KeyValue* open = nullptr;
    while (std::getline(in, raw)) {
      ++line_no;
      std::size_t hash = raw.find('#');
      std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
      if (trimmed(s).empty()) continue;
      std::string key;
      std::size_t rest = 0;
      if (is_key_line(trimmed(s), key, rest)) {
        std::string t = trimmed(s);
        std::size_t indent = s.find(t);
        entries.push_back(KeyValue{key, {}, line_no});
        open = &entries.back();
        std::string val = t.substr(rest);
        std::size_t lead = val.find_first_not_of(" \t");
        if (lead != std::string::npos)
          open->value.append(val.substr(lead), line_no, indent + rest + lead);
      } else {
        if (!open)
          throw RingFileError("content before the first 'key:' line", line_no, 1);
        std::size_t lead = s.find_first_not_of(" \t");
        open->value.append(trimmed(s), line_no, lead);
      }
    }
  }
  auto find = [&](const std::string& key) -> const KeyValue* {
    const KeyValue* hit = nullptr;
    for (const auto& e : entries)
      if (e.key == key) {
        if (hit) throw RingFileError("duplicate key '" + key + "'", e.line, 1);
        hit = &e;
      }
    return hit;
  };
  for (const auto& e : entries)
    if (e.key != "field" && e.key != "vars" && e.key != "grading" &&
        e.key != "ideal" && e.key != "filtration" && e.key != "witnesses")
      throw RingFileError("unknown key '" + e.key + "'", e.line, 1);

  const KeyValue* fld = find("field");
  if (!fld) throw RingFileError("missing 'field:'", 1, 1);
  Field field = Field::rationals();
  {
    std::string d = trimmed(fld->value.text);
    if (d == "Q") {
      field = Field::rationals();
    } else if (d.size() > 1 && d[0] == 'F') {
      std::string digits = trimmed(d.substr(1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw RingFileError("bad field descriptor '" + d + "'", fld->line, 1);
      field = Field::prime(std::stoll(digits));
    } else {
      throw RingFileError("bad field descriptor '" + d + "' (use Q or F<p>)",
                          fld->line, 1);
    }
  }

  const KeyValue* vars = find("vars");
  if (!vars) throw RingFileError("missing 'vars:'", 1, 1);
  std::vector<std::string> names = split_ws(vars->value.text);
  if (names.empty()) throw RingFileError("no variables declared", vars->line, 1);
  for (const auto& n : names) {
    bool ok = std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_';
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ok = false;
    if (!ok) throw RingFileError("bad variable name '" + n + "'", vars->line, 1);
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw RingFileError("variable '" + names[i] + "' declared twice",
                            vars->line, 1);

  std::vector<Multidegree> mdegs;
  if (const KeyValue* gr = find("grading")) {
    std::vector<std::vector<int64_t>> rows;
    for (const Located& chunk : split_located(gr->value, ';')) {
      if (trimmed(chunk.text).empty()) continue;
      std::vector<int64_t> row;
      for (const auto& w : split_ws(chunk.text)) {
        try {
          row.push_back(std::stoll(w));
        } catch (...) {
          auto [line, col] = chunk.locate(0);
          throw RingFileError("bad grading entry '" + w + "'", line, col);
        }
      }
      if (row.size() != names.size()) {
        auto [line, col] = chunk.locate(0);
        throw RingFileError("grading row needs one entry per variable", line, col);
      }
      rows.push_back(std::move(row));
    }
    if (!rows.empty()) {
      mdegs.assign(names.size(), Multidegree(rows.size(), 0));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t v = 0; v < names.size(); ++v) mdegs[v][r] = rows[r][v];
    }
  }

  RingPtr ring;
  try {
    ring = make_ring(field, names, MonomialOrder::degrevlex(), mdegs);
  } catch (const std::exception& e) {
    throw RingFileError(e.what(), vars->line, 1);
  }

  std::vector<Polynomial> gens;
  const KeyValue* id = find("ideal");
  if (id && !trimmed(id->value.text).empty()) {
    for (const Located& chunk : split_located(id->value, ';')) {
      Polynomial f = parse_poly_chunk(ring, chunk);
      auto [line, col] = chunk.locate(0);
      if (f.is_zero())
        throw RingFileError("zero generator", line, col);
      if (!f.is_homogeneous())
        throw RingFileError("inhomogeneous generator", line, col);
      if (f.degree() < 2)
        throw RingFileError("defining ideal may not contain forms of degree < 2",
                            line, col);
      if (ring->has_fine_grading() && !f.is_multihomogeneous())
        throw RingFileError("generator is not multigraded-homogeneous", line, col);
      gens.push_back(std::move(f));
    }
  }

  std::optional<KoszulFiltration> filtration;
  const KeyValue* filt = find("filtration");
  const KeyValue* wit = find("witnesses");
  if (wit && !filt)
    throw RingFileError("'witnesses:' without 'filtration:'", wit->line, 1);
  if (filt) {
    KoszulFiltration F;
    for (const Located& chunk : split_located(filt->value, ';')) {
      std::vector<Polynomial> ideal;
      for (const Located& piece : split_located(chunk, ',')) {
        if (trimmed(piece.text).empty()) continue;
        Polynomial f = parse_poly_chunk(ring, piece);
        auto [line, col] = piece.locate(0);
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != 1)
          throw RingFileError("filtration ideals are generated by linear forms",
                              line, col);
        ideal.push_back(std::move(f));
      }
      F.ideals.push_back(std::move(ideal));
    }
    if (wit) {
      // entry grammar: <index> = <index> + <linear form> -> <index>
      for (const Located& chunk : split_located(wit->value, ';')) {
        if (trimmed(chunk.text).empty()) continue;
        auto [line, col] = chunk.locate(0);
        const std::string& s = chunk.text;
        std::size_t eq = s.find('='), plus = s.find('+', eq == std::string::npos ? 0 : eq);
        std::size_t arrow = s.find("->", plus == std::string::npos ? 0 : plus);
        if (eq == std::string::npos || plus == std::string::npos ||
            arrow == std::string::npos)
          throw RingFileError("witness entry needs the form 'I = J + x -> C'",
                              line, col);
        auto index_of = [&](const std::string& part, const char* what) {
          std::string t = trimmed(part);
          if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
              }))
            throw RingFileError(std::string("bad ") + what + " index '" + t + "'",
                                line, col);
          std::size_t idx = std::stoull(t);
          if (idx >= F.ideals.size())
            throw RingFileError(std::string(what) + " index " + t +
                                    " out of range (filtration has " +
                                    std::to_string(F.ideals.size()) + " ideals)",
                                line, col);
          return idx;
        };
        std::size_t self = index_of(s.substr(0, eq), "ideal");
        FiltrationWitness w;
        w.smaller = index_of(s.substr(eq + 1, plus - eq - 1), "witness");
        Located gen_chunk;
        gen_chunk.text = s.substr(plus + 1, arrow - plus - 1);
        {
          auto [gl, gc] = chunk.locate(plus + 1);
          gen_chunk.anchors.emplace_back(0, gl, gc - 1);
        }
        Polynomial x = parse_poly_chunk(ring, gen_chunk);
        if (x.is_zero() || !x.is_homogeneous() || x.degree() != 1)
          throw RingFileError("witness generator must be a linear form", line, col);
        w.cyclic_gen = std::move(x);
        w.colon = index_of(s.substr(arrow + 2), "colon");
        if (F.witnesses.count(self))
          throw RingFileError("duplicate witness for ideal " + std::to_string(self),
                              line, col);
        F.witnesses.emplace(self, std::move(w));
      }
    }
    filtration = std::move(F);
  }

  try {
    return RingFile{QuotientRing(make_ideal(ring, std::move(gens))),
                    std::move(filtration)};
  } catch (const std::exception& e) {
    throw RingFileError(e.what(), id ? id->line : 1, 1);
  }
}

std::string print_ring_file(const RingFile& rf) {
  const RingPtr& ring = rf.ring.ambient();
  std::ostringstream out;
  const Field& k = ring->field();
  out << "field: "
      << (k.is_prime_field() ? "F" + std::to_string(k.p) : std::string("Q"))
      << "\n";
  out << "vars:";
  for (const auto& n : ring->var_names()) out << " " << n;
  out << "\n";
  if (ring->has_fine_grading()) {
    out << "grading:";
    for (std::size_t r = 0; r < ring->grading_rows(); ++r) {
      if (r) out << ";";
      for (std::size_t v = 0; v < ring->nvars(); ++v)
        out << " " << ring->var_multidegrees()[v][r];
    }
    out << "\n";
  }
  const auto& gens = rf.ring.defining_ideal().gens;
  if (!gens.empty()) {
    out << "ideal: ";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out << "; ";
      out << to_string(gens[i]);
    }
    out << "\n";
  }
  if (rf.filtration) {
    out << "filtration:";
    for (std::size_t i = 0; i < rf.filtration->ideals.size(); ++i) {
      out << (i ? " ;" : "");
      for (std::size_t j = 0; j < rf.filtration->ideals[i].size(); ++j)
        out << (j ? ", " : " ") << to_string(rf.filtration->ideals[i][j]);
      if (rf.filtration->ideals[i].empty()) out << " ";
    }
    out << "\n";
    if (!rf.filtration->witnesses.empty()) {
      out << "witnesses: ";
      bool first = true;
      for (const auto& [idx, w] : rf.filtration->witnesses) {
        if (!first) out << "; ";
        first = false;
        out << idx << " = " << w.smaller << " + " << to_string(w.cyclic_gen)
            << " -> " << w.colon;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace koszul
