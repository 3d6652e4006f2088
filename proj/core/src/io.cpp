#include "walkup/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "walkup/error.hpp"

namespace walkup {

using json = nlohmann::json;

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

struct Token {
  std::string text;
  std::size_t column;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

SimplicialComplex parse_facet_list(std::string_view text) {
  std::vector<std::vector<VertexLabel>> facets;
  std::map<Face, std::size_t> seen;  // sorted facet -> line of first occurrence
  std::size_t expected = 0, expected_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      tokens.push_back({std::string(line.substr(i, j - i)), i + 1});
      i = j;
    }
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    std::set<std::string_view> in_facet;
    for (const auto& tok : tokens) {
      if (!is_valid_label(tok.text))
        throw ParseError(line_no, tok.column, "invalid vertex label '" + tok.text + "'");
      if (!in_facet.insert(tok.text).second)
        throw ParseError(line_no, tok.column, "vertex '" + tok.text + "' repeated in facet");
    }
    if (facets.empty()) {
      expected = tokens.size();
      expected_line = line_no;
    } else if (tokens.size() != expected) {
      throw ParseError(line_no, tokens.front().column,
                       "facet has " + std::to_string(tokens.size()) + " vertices, line " +
                           std::to_string(expected_line) + " has " + std::to_string(expected));
    }
    std::vector<VertexLabel> facet;
    for (auto& tok : tokens) facet.push_back(std::move(tok.text));
    Face key = facet;
    std::sort(key.begin(), key.end());
    if (auto [it, fresh] = seen.emplace(key, line_no); !fresh)
      throw ParseError(line_no, 1, "duplicate of the facet on line " + std::to_string(it->second));
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError(line_no, 1, "no facets in input");
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_facets_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, "malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw ParseError(1, 1, "expected an object with a \"facets\" array");
  std::vector<std::vector<VertexLabel>> facets;
  for (std::size_t i = 0; i < doc["facets"].size(); ++i) {
    const json& f = doc["facets"][i];
    if (!f.is_array()) throw ParseError(1, 1, "facet " + std::to_string(i) + " is not an array");
    std::vector<VertexLabel> facet;
    for (const json& v : f) {
      if (!v.is_string())
        throw ParseError(1, 1, "facet " + std::to_string(i) + " has a non-string label");
      facet.push_back(v.get<std::string>());
    }
    facets.push_back(std::move(facet));
  }
  try {
    return SimplicialComplex::from_facets(facets);
  } catch (const Error& e) {
    throw ParseError(1, 1, e.what());
  }
}

SimplicialComplex parse_complex(std::string_view text) {
  for (char c : text) {
    if (is_space(c) || c == '\n') continue;
    if (c == '{') return parse_facets_json(text);
    break;
  }
  return parse_facet_list(text);
}

std::string format_facet_list(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& f : complex.facet_ids()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += complex.label(f[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_facets_json(const SimplicialComplex& complex) {
  return json{{"facets", complex.facets()}}.dump();
}

std::string read_text(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidParameters, "cannot open '" + path.string() + "'");
  return read_text(in);
}

std::string format_ledger(const HandleLedger& ledger) {
  json handles = json::array();
  for (const auto& h : ledger.handles) {
    json pairs = json::array();
    for (const auto& [src, tgt] : h.psi.pairs) pairs.push_back({src, tgt});
    handles.push_back({{"sigma1", h.sigma1}, {"sigma2", h.sigma2}, {"pairs", pairs}});
  }
  json doc = {{"format", "walkup-handle-ledger"},
              {"version", 1},
              {"dimension", ledger.base.dimension()},
              {"base", ledger.base.facets()},
              {"handles", handles}};
  return doc.dump(1) + "\n";
}

HandleLedger parse_ledger(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, "malformed JSON");
  }
  try {
    if (doc.at("format") != "walkup-handle-ledger") throw ParseError(1, 1, "not a handle ledger");
    if (doc.at("version") != 1) throw ParseError(1, 1, "unsupported ledger version");
    HandleLedger ledger;
    ledger.base =
        SimplicialComplex::from_facets(doc.at("base").get<std::vector<std::vector<VertexLabel>>>());
    if (doc.contains("dimension") && doc["dimension"] != ledger.base.dimension())
      throw ParseError(1, 1, "dimension does not match the base facets");
    for (const json& h : doc.at("handles")) {
      HandleRecord rec;
      for (const json& p : h.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw ParseError(1, 1, "pairs must be [source, target]");
        rec.psi.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
      rec.sigma1 = h.at("sigma1").get<Face>();
      rec.sigma2 = h.at("sigma2").get<Face>();
      std::sort(rec.sigma1.begin(), rec.sigma1.end());
      std::sort(rec.sigma2.begin(), rec.sigma2.end());
      if (rec.sigma1 != rec.psi.source_facet() || rec.sigma2 != rec.psi.target_facet())
        throw ParseError(1, 1, "sigma1/sigma2 disagree with the pairs");
      ledger.handles.push_back(std::move(rec));
    }
    return ledger;
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("bad ledger structure: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(1, 1, e.what());
  }
}

}  // namespace walkup
