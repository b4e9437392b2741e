#include "ltireach/cli/instance.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace ltireach {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

enum class Section { None, Matrix, Control, Source, Target };
enum class Part { None, Vertices, Rays, Lines };

bool is_part(const std::string& w) { return w == "vertices" || w == "rays" || w == "lines"; }

class Parser {
public:
  LtiSystem run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no_;
      handle(tokenize(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    return finish();
  }

private:
  [[noreturn]] void fail(int column, const std::string& what) const { throw ParseError(line_no_, column, what); }

  void handle(const std::vector<Token>& toks) {
    if (toks.empty()) return;
    const std::string& head = toks.front().text;
    if (!head.empty() && std::isalpha(static_cast<unsigned char>(head.front()))) {
      keyword(toks);
      return;
    }
    row(toks);
  }

  void keyword(const std::vector<Token>& toks) {
    const Token& t = toks.front();
    if (t.text == "dim") {
      if (dim_) fail(t.column, "duplicate dim");
      if (toks.size() != 2) fail(t.column, "dim takes one positive integer");
      int d = 0;
      try {
        std::size_t used = 0;
        d = std::stoi(toks[1].text, &used);
        if (used != toks[1].text.size()) d = 0;
      } catch (const std::exception&) {
        d = 0;
      }
      if (d <= 0) fail(toks[1].column, "dim must be a positive integer, got '" + toks[1].text + "'");
      dim_ = d;
      section_ = Section::None;
      return;
    }
    if (!dim_) fail(t.column, "'" + t.text + "' before dim");
    std::size_t next = 1;
    if (t.text == "matrix") {
      if (matrix_line_) fail(t.column, "duplicate matrix section");
      matrix_line_ = line_no_;
      section_ = Section::Matrix;
    } else if (t.text == "control") {
      sys_.controls.components.emplace_back(*dim_);
      control_lines_.push_back(line_no_);
      section_ = Section::Control;
      part_ = Part::None;
    } else if (t.text == "source") {
      if (source_) fail(t.column, "duplicate source section");
      source_line_ = line_no_;
      section_ = Section::Source;
    } else if (t.text == "target") {
      if (target_seen_) fail(t.column, "duplicate target section");
      target_seen_ = true;
      sys_.target = GenPolyhedron(*dim_);
      section_ = Section::Target;
      part_ = Part::None;
    } else if (is_part(t.text)) {
      next = 0;
    } else {
      fail(t.column, "unknown keyword '" + t.text + "'");
    }
    if (next < toks.size()) {
      const Token& p = toks[next];
      if (!is_part(p.text)) fail(p.column, "unexpected '" + p.text + "'");
      if (section_ != Section::Control && section_ != Section::Target)
        fail(p.column, "'" + p.text + "' outside a control or target section");
      part_ = p.text == "vertices" ? Part::Vertices : p.text == "rays" ? Part::Rays : Part::Lines;
      if (next + 1 < toks.size()) fail(toks[next + 1].column, "unexpected '" + toks[next + 1].text + "'");
    }
  }

  void row(const std::vector<Token>& toks) {
    if (!dim_) fail(toks.front().column, "data before dim");
    if (section_ == Section::None) fail(toks.front().column, "data outside a section");
    if (static_cast<int>(toks.size()) != *dim_)
      fail(toks.front().column, "row has " + std::to_string(toks.size()) + " entries but dim is " + std::to_string(*dim_));
    RatVector v(*dim_);
    for (int i = 0; i < *dim_; ++i) {
      const Token& t = toks[static_cast<std::size_t>(i)];
      try {
        v(i) = Rat::parse(t.text);
      } catch (const std::invalid_argument&) {
        fail(t.column, "malformed rational '" + t.text + "'");
      }
    }
    switch (section_) {
      case Section::Matrix:
        if (static_cast<int>(matrix_rows_.size()) == *dim_) fail(toks.front().column, "matrix has more than dim rows");
        matrix_rows_.push_back(v);
        break;
      case Section::Source:
        if (source_) fail(toks.front().column, "source takes a single row");
        source_ = v;
        break;
      case Section::Control:
      case Section::Target: {
        if (part_ == Part::None) fail(toks.front().column, "expected vertices, rays or lines first");
        GenPolyhedron& p = section_ == Section::Control ? sys_.controls.components.back() : sys_.target;
        (part_ == Part::Vertices ? p.vertices : part_ == Part::Rays ? p.rays : p.lines).push_back(v);
        break;
      }
      case Section::None: break;
    }
  }

  LtiSystem finish() {
    ++line_no_;
    if (!dim_) fail(1, "missing dim");
    const int d = *dim_;
    if (!matrix_line_) fail(1, "missing matrix section");
    if (static_cast<int>(matrix_rows_.size()) != d) {
      line_no_ = *matrix_line_;
      fail(1, "matrix has " + std::to_string(matrix_rows_.size()) + " rows but dim is " + std::to_string(d));
    }
    sys_.a = RatMatrix(d, d);
    for (int r = 0; r < d; ++r) sys_.a.row(r) = matrix_rows_[static_cast<std::size_t>(r)].transpose();
    if (sys_.controls.components.empty()) fail(1, "missing control section");
    for (std::size_t i = 0; i < control_lines_.size(); ++i)
      if (sys_.controls.components[i].vertices.empty()) {
        line_no_ = control_lines_[i];
        fail(1, "control block has no vertices");
      }
    if (source_line_ && !source_) {
      line_no_ = *source_line_;
      fail(1, "source section has no row");
    }
    sys_.source = source_ ? *source_ : RatVector::Zero(d);
    if (!target_seen_) fail(1, "missing target section");
    return sys_;
  }

  LtiSystem sys_;
  int line_no_ = 0;
  std::optional<int> dim_;
  std::optional<int> matrix_line_, source_line_;
  std::vector<int> control_lines_;
  std::vector<RatVector> matrix_rows_;
  std::optional<RatVector> source_;
  bool target_seen_ = false;
  Section section_ = Section::None;
  Part part_ = Part::None;
};

void emit_row(std::ostringstream& os, const char* indent, const RatVector& v) {
  os << indent;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v(i).str();
  os << '\n';
}

void emit_polyhedron(std::ostringstream& os, const GenPolyhedron& p) {
  os << "  vertices\n";
  for (const auto& v : p.vertices) emit_row(os, "    ", v);
  if (!p.rays.empty()) {
    os << "  rays\n";
    for (const auto& v : p.rays) emit_row(os, "    ", v);
  }
  if (!p.lines.empty()) {
    os << "  lines\n";
    for (const auto& v : p.lines) emit_row(os, "    ", v);
  }
}

}  // namespace

LtiSystem parse_instance(std::string_view text) { return Parser().run(text); }

std::string emit_instance(const LtiSystem& sys) {
  std::ostringstream os;
  os << "dim " << sys.dim() << '\n' << "matrix\n";
  for (int r = 0; r < sys.dim(); ++r) emit_row(os, "  ", sys.a.row(r).transpose());
  for (const auto& c : sys.controls.components) {
    os << "control\n";
    emit_polyhedron(os, c);
  }
  os << "source\n";
  emit_row(os, "  ", sys.source);
  os << "target\n";
  emit_polyhedron(os, sys.target);
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

LtiSystem read_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string instance_hash(const LtiSystem& sys) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(emit_instance(sys))));
  return buf;
}

}  // namespace ltireach
