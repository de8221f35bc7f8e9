#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "quivir/quiver.hpp"

namespace quivir {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

Int parse_int(std::string_view s, int line, const char* what) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

Int parse_count(std::string_view s, int line) {
  if (s.size() < 2 || s[0] != 'x') throw ParseError(line, "expected xCOUNT, got '" + std::string(s) + "'");
  Int n = parse_int(s.substr(1), line, "count");
  if (n < 1) throw ParseError(line, "count must be positive");
  return n;
}

struct PendingArrow {
  std::string tail, head;
  Int count;
  int line;
};

struct PendingValue {
  std::string vertex;
  Int value;
  int line;
};

}  // namespace

QuiverFile parse_quiver_file(std::string_view text) {
  QuiverBuilder builder;
  std::vector<PendingArrow> edges, relations;
  std::vector<PendingValue> dims, frames;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto w = split_words(line);
    if (w.empty()) continue;

    const std::string_view directive = w[0];
    if (directive == "vertex") {
      if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "frozen"))
        throw ParseError(line_no, "expected 'vertex NAME [frozen]'");
      try {
        builder.vertex(std::string(w[1]), w.size() == 3);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (directive == "edge" || directive == "relation") {
      if (w.size() < 3 || w.size() > 4)
        throw ParseError(line_no, "expected '" + std::string(directive) + " TAIL HEAD [xCOUNT]'");
      Int count = w.size() == 4 ? parse_count(w[3], line_no) : 1;
      (directive == "edge" ? edges : relations).push_back({std::string(w[1]), std::string(w[2]), count, line_no});
    } else if (directive == "dim" || directive == "frame") {
      if (w.size() != 3) throw ParseError(line_no, "expected '" + std::string(directive) + " NAME INT'");
      Int value = parse_int(w[2], line_no, "integer");
      if (value < 0) throw ParseError(line_no, std::string(directive) + " must be nonnegative");
      (directive == "dim" ? dims : frames).push_back({std::string(w[1]), value, line_no});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
    }
  }

  auto add_arrows = [&](const std::vector<PendingArrow>& arrows, bool relation) {
    for (const auto& a : arrows) {
      try {
        if (relation)
          builder.relation(a.tail, a.head, a.count);
        else
          builder.edge(a.tail, a.head, a.count);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(a.line, e.what());
      }
    }
  };
  add_arrows(edges, false);
  add_arrows(relations, true);

  QuiverFile file{builder.build(), std::nullopt, std::nullopt};
  auto collect = [&](const std::vector<PendingValue>& values) -> std::optional<DimVector> {
    if (values.empty()) return std::nullopt;
    DimVector v = DimVector::zeros(file.quiver.vertex_count());
    std::vector<bool> seen(v.size(), false);
    for (const auto& pv : values) {
      auto idx = file.quiver.index_of(pv.vertex);
      if (!idx) throw ParseError(pv.line, "unknown vertex '" + pv.vertex + "'");
      if (seen[*idx]) throw ParseError(pv.line, "repeated value for vertex '" + pv.vertex + "'");
      seen[*idx] = true;
      v[*idx] = pv.value;
    }
    return v;
  };
  file.dim = collect(dims);
  file.frame = collect(frames);
  return file;
}

std::string serialize_quiver_file(const QuiverFile& file) {
  const Quiver& q = file.quiver;
  std::ostringstream out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out << "vertex " << q.name(v);
    if (q.is_frozen(v)) out << " frozen";
    out << '\n';
  }
  auto grouped = [&](const std::vector<Arrow>& arrows, const char* word) {
    std::vector<std::pair<Arrow, Int>> groups;
    for (const auto& a : arrows) {
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == a; });
      if (it == groups.end())
        groups.emplace_back(a, 1);
      else
        ++it->second;
    }
    for (const auto& [a, n] : groups) {
      out << word << ' ' << q.name(a.tail) << ' ' << q.name(a.head);
      if (n > 1) out << " x" << n;
      out << '\n';
    }
  };
  grouped(q.edges(), "edge");
  grouped(q.relations(), "relation");
  auto values = [&](const std::optional<DimVector>& v, const char* word) {
    if (!v) return;
    if (v->size() != q.vertex_count()) throw Error(std::string(word) + " vector size mismatch");
    for (std::size_t i = 0; i < v->size(); ++i) out << word << ' ' << q.name(i) << ' ' << (*v)[i] << '\n';
  };
  values(file.dim, "dim");
  values(file.frame, "frame");
  return out.str();
}

}  // namespace quivir
