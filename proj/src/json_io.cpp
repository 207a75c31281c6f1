#include "groth/json_io.hpp"

#include <set>
#include <sstream>

namespace groth {

json to_json(Letter a) { return json{{"v", a.value}, {"p", a.primed}}; }

Letter letter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("v") || !j["v"].is_number_integer())
    throw StructuralError("letter must be an object {\"v\":int,\"p\":bool}");
  int v = j["v"].get<int>();
  if (v < 1 || v > kMaxLetterValue) throw StructuralError("letter value out of range");
  bool p = j.value("p", false);
  return Letter{v, p};
}

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const WeightVector& w) { return json(w.coords()); }

namespace {

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw StructuralError(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const Tableau& t) {
  json cells = json::array();
  const auto& sh = t.shape();
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      const auto& f = t.at(r, c);
      cells.push_back(json{{"row", r}, {"col", c}, {"primed", f.primed_values()}, {"unprimed", f.unprimed_values()}});
    }
  return json{{"outer", to_json(sh.outer())}, {"inner", to_json(sh.inner())}, {"cells", cells}};
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("outer")) throw StructuralError("tableau JSON needs an \"outer\" shape");
  Partition outer(int_list(j["outer"], "outer"));
  Partition inner = j.contains("inner") ? Partition(int_list(j["inner"], "inner")) : Partition{};
  Tableau t(SkewShape(outer, inner));
  std::set<std::pair<int, int>> seen;
  if (j.contains("cells")) {
    if (!j["cells"].is_array()) throw StructuralError("\"cells\" must be an array");
    for (const auto& cell : j["cells"]) {
      if (!cell.contains("row") || !cell.contains("col")) throw StructuralError("cell needs row and col");
      int r = cell["row"].get<int>(), c = cell["col"].get<int>();
      if (!seen.insert({r, c}).second) throw StructuralError("cell listed twice");
      auto& f = t.at(r, c);
      if (cell.contains("primed"))
        for (int v : int_list(cell["primed"], "primed")) f.add(Letter::primed_of(v));
      if (cell.contains("unprimed"))
        for (int v : int_list(cell["unprimed"], "unprimed")) f.add(Letter::unprimed_of(v));
    }
  }
  return t;
}

json to_json(const TotalOrder& order) {
  json a = json::array();
  for (Letter x : order.sequence()) a.push_back(to_json(x));
  return a;
}

TotalOrder order_from_json(const json& j) {
  if (!j.is_array()) throw StructuralError("order must be an array of letters");
  std::vector<Letter> seq;
  for (const auto& e : j) seq.push_back(letter_from_json(e));
  return TotalOrder(std::move(seq));
}

Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition{};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw StructuralError("bad partition '" + text + "' (use e.g. 3,2,1 or - for empty)");
    parts.push_back(std::stoi(item));
  }
  if (parts.empty()) throw StructuralError("bad partition '" + text + "' (use - for empty)");
  return Partition(std::move(parts));
}

std::string partition_arg(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (int x : p.parts()) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

TotalOrder parse_order(const std::string& text) {
  std::vector<Letter> seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '<')) seq.push_back(parse_letter(item));
  return TotalOrder(std::move(seq));
}

std::string diagram(const Tableau& t, int mark_row, int mark_col) {
  const auto& sh = t.shape();
  std::string s;
  for (int r = 1; r <= sh.rows(); ++r) {
    if (r > 1) s += ',';
    for (int c = 1; c < sh.row_begin(r); ++c) s += '*';
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c)
      if (r == mark_row && c == mark_col) {
        const auto& box = t.at(r, c);
        s += box.empty() ? std::string("{X}") : "[" + box.to_string().substr(1, box.to_string().size() - 2) + "]";
      } else {
        s += t.at(r, c).to_string();
      }
  }
  return s;
}

Tableau parse_diagram(const std::string& text) {
  if (text.empty()) return Tableau{SkewShape{}};
  std::vector<int> outer, inner;
  std::vector<std::vector<BoxFill>> rows(1);
  std::vector<int> stars(1, 0);
  auto fail = [&](const std::string& why) { throw StructuralError("diagram \"" + text + "\": " + why); };
  auto read_letter = [&](std::size_t& i) {
    if (i >= text.size() || text[i] < '1' || text[i] > '9') fail("expected a letter");
    Letter a{text[i] - '0', false};
    ++i;
    if (i < text.size() && text[i] == '\'') {
      a.primed = true;
      ++i;
    }
    return a;
  };
  for (std::size_t i = 0; i < text.size();) {
    char ch = text[i];
    if (ch == ',') {
      rows.emplace_back();
      stars.push_back(0);
      ++i;
    } else if (ch == '*') {
      if (!rows.back().empty()) fail("skew cell after a box");
      ++stars.back();
      ++i;
    } else if (ch == '{') {
      BoxFill f;
      ++i;
      while (i < text.size() && text[i] != '}') f.add(read_letter(i));
      if (i >= text.size()) fail("unterminated box");
      ++i;
      rows.back().push_back(f);
    } else {
      rows.back().push_back(BoxFill::of(read_letter(i)));
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    outer.push_back(stars[r] + static_cast<int>(rows[r].size()));
    inner.push_back(stars[r]);
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  Tableau t{SkewShape(Partition(outer), Partition(inner))};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      t.at(static_cast<int>(r + 1), stars[r] + static_cast<int>(k) + 1) = rows[r][k];
  return t;
}

}  // namespace groth
