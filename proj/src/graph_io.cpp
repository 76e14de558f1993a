#include "egcert/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "egcert/errors.hpp"

namespace egcert {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string describe_byte(unsigned char c) {
  std::ostringstream os;
  os << "byte 0x" << std::hex << static_cast<int>(c);
  return os.str();
}

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

// Parses exactly `count` whitespace-separated non-negative integers.
bool parse_ints(std::string_view line, long long* out, int count) {
  int got = 0;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    if (got == count) return false;
    auto [next, ec] = std::from_chars(p, end, out[got]);
    if (ec != std::errc() || out[got] < 0) return false;
    if (next < end && *next != ' ' && *next != '\t') return false;
    p = next;
    ++got;
  }
  return got == count;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, comment-stripped line; false at end of input.
  bool next(std::string_view& content) {
    while (std::getline(in_, raw_)) {
      ++line_no_;
      content = strip_comment(raw_);
      if (!content.empty()) return true;
    }
    return false;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string raw_;
  std::size_t line_no_ = 0;
};

Graph read_one_edge_list(LineReader& reader, std::string_view header) {
  long long nm[2];
  const std::size_t header_line = reader.line_no();
  if (!parse_ints(header, nm, 2))
    throw ParseError("edge list line " + std::to_string(header_line) + ": expected header \"n m\"", header_line);
  if (nm[0] > kMaxInputOrder)
    throw ParseError("edge list line " + std::to_string(header_line) + ": order too large", header_line);
  const int n = static_cast<int>(nm[0]);
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (nm[1] > max_edges)
    throw ParseError("edge list line " + std::to_string(header_line) + ": more edges than a simple graph allows",
                     header_line);
  Graph g(n);
  for (long long i = 0; i < nm[1]; ++i) {
    std::string_view line;
    if (!reader.next(line))
      throw ParseError("edge list: expected " + std::to_string(nm[1]) + " edges, found " + std::to_string(i),
                       reader.line_no());
    long long uv[2];
    const std::size_t ln = reader.line_no();
    if (!parse_ints(line, uv, 2))
      throw ParseError("edge list line " + std::to_string(ln) + ": expected \"u v\"", ln);
    if (uv[0] >= n || uv[1] >= n)
      throw ParseError("edge list line " + std::to_string(ln) + ": vertex out of range", ln);
    if (uv[0] == uv[1]) throw ParseError("edge list line " + std::to_string(ln) + ": loop", ln);
    const int u = static_cast<int>(uv[0]);
    const int v = static_cast<int>(uv[1]);
    if (g.adjacent(u, v)) throw ParseError("edge list line " + std::to_string(ln) + ": duplicate edge", ln);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  const std::string_view record = strip_line_end(text);
  std::size_t pos = 0;
  if (record.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= record.size()) throw ParseError("graph6: empty record at offset " + std::to_string(pos), pos);

  auto value_at = [&](std::size_t i) -> std::uint64_t {
    if (i >= record.size()) throw ParseError("graph6: malformed length prefix, truncated at offset " + std::to_string(i), i);
    auto c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: " + describe_byte(c) + " outside 63..126 at offset " + std::to_string(i), i);
    return c - kBias;
  };

  if (record[pos] == ':' || record[pos] == '&' || record[pos] == ';')
    throw ParseError("graph6: sparse6/digraph6 records are not supported (offset " + std::to_string(pos) + ")", pos);

  std::uint64_t n = 0;
  const std::size_t prefix_start = pos;
  if (value_at(pos) < 63) {
    n = value_at(pos);
    pos += 1;
  } else if (value_at(pos + 1) < 63) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | value_at(pos + static_cast<std::size_t>(i));
    if (n <= 62) throw ParseError("graph6: malformed length prefix at offset " + std::to_string(prefix_start), prefix_start);
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | value_at(pos + static_cast<std::size_t>(i));
    if (n <= 258047)
      throw ParseError("graph6: malformed length prefix at offset " + std::to_string(prefix_start), prefix_start);
    pos += 8;
  }
  if (n > static_cast<std::uint64_t>(kMaxInputOrder))
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum", prefix_start);

  const int order = static_cast<int>(n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  for (std::size_t i = 0; i < body; ++i) {
    if (pos + i >= record.size())
      throw ParseError("graph6: record truncated at offset " + std::to_string(pos + i), pos + i);
    value_at(pos + i);
  }
  if (record.size() > pos + body)
    throw ParseError("graph6: trailing garbage at offset " + std::to_string(pos + body), pos + body);

  Graph g(order);
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::uint64_t chunk = static_cast<unsigned char>(record[pos + k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const std::uint64_t chunk = static_cast<unsigned char>(record[last]) - kBias;
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if ((chunk & pad_mask) != 0)
      throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(last), last);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_order(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view record = strip_line_end(line);
    if (trim(record).empty()) continue;
    try {
      out.push_back(parse_graph6(record));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  LineReader reader(in);
  std::string_view header;
  if (!reader.next(header)) throw ParseError("edge list: no header line", 0);
  Graph g = read_one_edge_list(reader, header);
  std::string_view extra;
  if (reader.next(extra))
    throw ParseError("edge list line " + std::to_string(reader.line_no()) + ": trailing content", reader.line_no());
  return g;
}

std::vector<Graph> read_edge_lists(std::istream& in) {
  std::vector<Graph> out;
  LineReader reader(in);
  std::string_view header;
  while (reader.next(header)) out.push_back(read_one_edge_list(reader, header));
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

GraphFormat detect_format(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    if (!line.empty()) {
      if (line.substr(0, kHeader.size()) == kHeader) return GraphFormat::kGraph6;
      long long nm[2];
      return parse_ints(line, nm, 2) ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
    }
    start = end + 1;
  }
  return GraphFormat::kGraph6;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? read_graph6_stream(in) : read_edge_lists(in);
}

}  // namespace egcert
