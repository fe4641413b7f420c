#include "toric/fan_file.hpp"

#include "toric/error.hpp"
#include "toric/numeric.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace toric {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : lines_(tokenize(text)), source_(std::move(source)) {}

  FanFile run() {
    FanFile out;
    bool have_dim = false, have_rays = false, have_cones = false;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_++];
      const std::string& key = line.tokens[0];
      if (key == "id") {
        expect_arity(line, 2);
        out.id = line.tokens[1];
      } else if (key == "name") {
        if (line.tokens.size() < 2) fail(line, "'name' needs a value");
        std::string name = line.tokens[1];
        for (std::size_t i = 2; i < line.tokens.size(); ++i) name += " " + line.tokens[i];
        out.name = name;
      } else if (key == "dim") {
        expect_arity(line, 2);
        const auto d = integer(line, 1);
        if (d <= 0) fail(line, "dimension must be positive");
        out.fan.dim = static_cast<std::size_t>(d);
        have_dim = true;
      } else if (key == "rays") {
        if (!have_dim) fail(line, "'rays' before 'dim'");
        expect_arity(line, 2);
        const auto k = count(line);
        for (std::int64_t i = 0; i < k; ++i) {
          const Line& row = next_row(line, "ray");
          if (row.tokens.size() != out.fan.dim)
            invalid(row, "ray " + std::to_string(i) + " has " + std::to_string(row.tokens.size()) +
                             " coordinates, expected " + std::to_string(out.fan.dim));
          RayVector u;
          Integer g = 0;
          for (std::size_t c = 0; c < row.tokens.size(); ++c) {
            u.push_back(integer(row, c));
            g = gcd_of(g, Integer(u.back()));
          }
          if (g != 1) invalid(row, "ray " + std::to_string(i) + " is not a primitive lattice vector");
          out.fan.rays.push_back(std::move(u));
        }
        have_rays = true;
      } else if (key == "cones") {
        if (!have_rays) fail(line, "'cones' before 'rays'");
        expect_arity(line, 2);
        const auto k = count(line);
        for (std::int64_t i = 0; i < k; ++i) {
          const Line& row = next_row(line, "cone");
          if (row.tokens.size() != out.fan.dim)
            invalid(row, "cone " + std::to_string(i) + " has " + std::to_string(row.tokens.size()) +
                             " rays, expected " + std::to_string(out.fan.dim));
          std::vector<std::size_t> idx;
          for (std::size_t c = 0; c < row.tokens.size(); ++c) {
            const auto v = integer(row, c);
            if (v < 0 || static_cast<std::size_t>(v) >= out.fan.rays.size())
              invalid(row, "cone " + std::to_string(i) + " references ray " + std::to_string(v) + " but only " +
                               std::to_string(out.fan.rays.size()) + " rays are defined");
            idx.push_back(static_cast<std::size_t>(v));
          }
          Cone cone(std::move(idx));
          for (std::size_t c = 1; c < cone.rays.size(); ++c)
            if (cone.rays[c] == cone.rays[c - 1]) invalid(row, "cone " + std::to_string(i) + " repeats a ray");
          out.fan.max_cones.push_back(std::move(cone));
        }
        have_cones = true;
      } else if (key == "expect") {
        expect_arity(line, 3);
        out.expected = std::make_pair(integer(line, 1), integer(line, 2));
      } else {
        fail(line, "unknown keyword '" + key + "'");
      }
    }
    if (!have_dim) throw Error(ErrorCode::ParseError, source_ + ": missing 'dim'");
    if (!have_rays) throw Error(ErrorCode::ParseError, source_ + ": missing 'rays'");
    if (!have_cones) throw Error(ErrorCode::ParseError, source_ + ": missing 'cones'");
    return out;
  }

 private:
  [[noreturn]] void fail(const Line& line, const std::string& msg) const {
    throw Error(ErrorCode::ParseError, source_ + ":" + std::to_string(line.number) + ": " + msg);
  }
  [[noreturn]] void invalid(const Line& line, const std::string& msg) const {
    throw Error(ErrorCode::ValidationError, source_ + ":" + std::to_string(line.number) + ": " + msg);
  }

  void expect_arity(const Line& line, std::size_t n) const {
    if (line.tokens.size() != n)
      fail(line, "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " value(s)");
  }

  std::int64_t integer(const Line& line, std::size_t i) const {
    const std::string& tok = line.tokens.at(i);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      fail(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
    return v;
  }

  std::int64_t count(const Line& line) const {
    const auto k = integer(line, 1);
    if (k < 0) fail(line, "count must be nonnegative");
    return k;
  }

  const Line& next_row(const Line& header, const char* what) {
    if (pos_ >= lines_.size()) fail(header, std::string("file ends before all ") + what + " rows were read");
    return lines_[pos_++];
  }

  std::vector<Line> lines_;
  std::string source_;
  std::size_t pos_ = 0;
};

}  // namespace

FanFile parse_fan_text(std::string_view text, const std::string& source) { return Parser(text, source).run(); }

FanFile parse_fan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  FanFile f = parse_fan_text(buf.str(), path.string());
  if (f.id.empty()) f.id = path.stem().string();
  return f;
}

std::string serialize_fan_file(const FanFile& file) {
  std::ostringstream os;
  if (!file.id.empty()) os << "id " << file.id << '\n';
  if (file.name) os << "name " << *file.name << '\n';
  os << "dim " << file.fan.dim << '\n';
  os << "rays " << file.fan.rays.size() << '\n';
  for (const auto& u : file.fan.rays) {
    for (std::size_t c = 0; c < u.size(); ++c) os << (c ? " " : "") << u[c];
    os << '\n';
  }
  os << "cones " << file.fan.max_cones.size() << '\n';
  for (const auto& cone : file.fan.max_cones) {
    for (std::size_t c = 0; c < cone.rays.size(); ++c) os << (c ? " " : "") << cone.rays[c];
    os << '\n';
  }
  if (file.expected) os << "expect " << file.expected->first << ' ' << file.expected->second << '\n';
  return os.str();
}

}  // namespace toric
