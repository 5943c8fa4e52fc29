#include "handlecalc/hbd.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace handlecalc::hbd {

namespace {

struct Word {
  std::string text;
  int column;  // 1-based
};

std::vector<Word> split_words(const std::string& line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_id(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
          c == '\''))
      return false;
  }
  return true;
}

class LineParser {
 public:
  LineParser(DiagramDocument& doc, int line) : doc_(doc), line_(line) {}

  [[noreturn]] void fail(const std::string& message, int column) const {
    throw ParseError(message, line_, column);
  }

  void expect_count(const std::vector<Word>& w, std::size_t n, const char* usage) const {
    if (w.size() != n) fail(std::string("expected '") + usage + "'", w.size() > n ? w[n].column : w.back().column);
  }

  std::string id(const Word& w) const {
    if (!valid_id(w.text)) fail("invalid identifier '" + w.text + "'", w.column);
    return w.text;
  }

  BigInt integer(const Word& w) const {
    const std::string& s = w.text;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail("expected an integer, got '" + s + "'", w.column);
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail("expected an integer, got '" + s + "'", w.column);
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }

  std::string two_handle(const Word& w) const {
    const std::string k = id(w);
    if (!doc_.decomposition.has_two_handle(k)) fail("unknown 2-handle '" + k + "'", w.column);
    return k;
  }

  std::string one_handle(const Word& w) const {
    const std::string h = id(w);
    if (!doc_.decomposition.has_one_handle(h)) fail("unknown 1-handle '" + h + "'", w.column);
    return h;
  }

  void fresh(const Word& w) const {
    if (doc_.decomposition.has_id(w.text)) fail("duplicate identifier '" + w.text + "'", w.column);
  }

 private:
  DiagramDocument& doc_;
  int line_;
};

}  // namespace

DiagramDocument parse_hbd(std::string_view text, const std::string& source_path) {
  DiagramDocument doc;
  doc.source_path = source_path;
  bool header = false;
  int statements = 0;
  std::vector<std::pair<std::string, std::string>> seen_links;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = raw.substr(0, raw.find('#'));
    const auto w = split_words(line);
    if (w.empty()) continue;
    LineParser p(doc, line_no);
    const std::string& kw = w[0].text;

    if (kw == "manifold") {
      if (header) p.fail("duplicate manifold header", w[0].column);
      if (statements > 0) p.fail("manifold header must come first", w[0].column);
      if (w.size() < 2) p.fail("manifold needs a name", w[0].column);
      const std::size_t start = static_cast<std::size_t>(w[1].column - 1);
      std::string name = line.substr(start);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      doc.name = name;
      doc.decomposition.set_name(name);
      header = true;
      continue;
    }
    ++statements;

    if (kw == "1h") {
      p.expect_count(w, 2, "1h <id>");
      p.fresh(w[1]);
      doc.decomposition.add_one_handle(p.id(w[1]));
    } else if (kw == "2h") {
      p.expect_count(w, 4, "2h <id> framing <int>");
      if (w[2].text != "framing") p.fail("expected 'framing'", w[2].column);
      const std::string k = p.id(w[1]);
      p.fresh(w[1]);
      doc.decomposition.add_two_handle(k, p.integer(w[3]));
    } else if (kw == "lk") {
      p.expect_count(w, 4, "lk <id> <id> <int>");
      const std::string a = p.two_handle(w[1]);
      const std::string b = p.two_handle(w[2]);
      if (a == b) p.fail("self-linking forbidden; use the framing", w[2].column);
      const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      for (const auto& s : seen_links) {
        if (s == key) {
          doc.warnings.push_back("line " + std::to_string(line_no) + ": link " + a + " " + b +
                                 " redefined");
        }
      }
      seen_links.push_back(key);
      doc.decomposition.set_link(a, b, p.integer(w[3]));
    } else if (kw == "rt") {
      p.expect_count(w, 4, "rt <2h-id> <1h-id> <int>");
      const std::string k = p.two_handle(w[1]);
      const std::string h = p.one_handle(w[2]);
      doc.decomposition.set_run_through(k, h, p.integer(w[3]));
    } else if (kw == "front") {
      if (w.size() < 3 || w[2].text != ":") p.fail("expected 'front <id> : <tokens>'", w[0].column);
      const std::string k = p.two_handle(w[1]);
      if (doc.fronts.count(k)) p.fail("second front for '" + k + "'", w[1].column);
      const int offset = w[2].column;
      doc.fronts[k] = legendrian::parse_front(std::string_view(line).substr(static_cast<std::size_t>(offset)),
                                              line_no, offset);
    } else if (kw == "3h") {
      p.expect_count(w, 2, "3h <count>");
      const BigInt count = p.integer(w[1]);
      if (count < 0 || count > 1000000) p.fail("3-handle count out of range", w[1].column);
      doc.decomposition.set_three_handle_count(count.convert_to<long>());
    } else {
      p.fail("unknown statement '" + kw + "'", w[0].column);
    }
  }
  // Statements are still checked without a header so that their errors surface first.
  if (!header) throw ParseError("missing manifold header", 1, 1);
  return doc;
}

DiagramDocument read_hbd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hbd(buffer.str(), path);
}

std::string print_hbd(const HandleDecomposition& d, const legendrian::LegendrianAnnotation& fronts) {
  std::ostringstream out;
  out << "manifold " << (d.name().empty() ? "unnamed" : d.name()) << '\n';
  for (const auto& h : d.one_handles()) out << "1h " << h << '\n';
  for (const auto& k : d.two_handles()) out << "2h " << k << " framing " << d.framing(k) << '\n';
  const auto& twos = d.two_handles();
  for (std::size_t i = 0; i < twos.size(); ++i) {
    for (std::size_t j = i + 1; j < twos.size(); ++j) {
      const BigInt v = d.link(twos[i], twos[j]);
      if (v != 0) out << "lk " << twos[i] << ' ' << twos[j] << ' ' << v << '\n';
    }
  }
  for (const auto& k : twos) {
    for (const auto& h : d.one_handles()) {
      const BigInt v = d.run_through(k, h);
      if (v != 0) out << "rt " << k << ' ' << h << ' ' << v << '\n';
    }
  }
  if (d.three_handle_count() > 0) out << "3h " << d.three_handle_count() << '\n';
  for (const auto& k : twos) {
    auto it = fronts.find(k);
    if (it != fronts.end()) out << "front " << k << " : " << it->second.to_string() << '\n';
  }
  return out.str();
}

std::string print_hbd(const DiagramDocument& doc) {
  HandleDecomposition d = doc.decomposition;
  d.set_name(doc.name);
  return print_hbd(d, doc.fronts);
}

}  // namespace handlecalc::hbd
