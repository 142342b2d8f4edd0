#include "parembed/descriptor_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "parembed/error.hpp"

namespace parembed {

namespace {

constexpr std::array<std::string_view, 20> kKeys = {
    "dim",           "closed",       "orientable",      "betti_z", "betti_z2",          "euler",
    "simply_connected", "torsion_free", "stably_parallelizable", "w2_zero", "bockstein_w2_zero", "c1_zero",
    "p1_zero",       "c_top_pairing", "p1_pairings",    "embeds_codim", "embeds_evidence", "pi1",
    "lai.n",         "lai.pairings"};

constexpr std::array<std::string_view, 12> kRequired = {
    "dim",     "closed",  "orientable",       "betti_z",      "betti_z2", "simply_connected", "torsion_free",
    "stably_parallelizable", "w2_zero", "bockstein_w2_zero", "c1_zero", "p1_zero"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Field {
  std::string value;
  std::size_t line;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw SyntaxError(line, "line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const Field& f, std::string_view key) {
  std::int64_t x = 0;
  const auto* first = f.value.data();
  const auto* last = first + f.value.size();
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || f.value.empty())
    fail(f.line, std::string(key) + " expects an integer, got '" + f.value + "'");
  return x;
}

bool to_bool(const Field& f, std::string_view key) {
  if (f.value == "true") return true;
  if (f.value == "false") return false;
  fail(f.line, std::string(key) + " expects true or false, got '" + f.value + "'");
}

std::vector<std::string> split_list(const Field& f) {
  std::vector<std::string> items;
  if (trim(f.value).empty()) return items;
  std::string_view rest = f.value;
  while (true) {
    const auto comma = rest.find(',');
    items.emplace_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return items;
}

std::vector<std::int64_t> to_int_list(const Field& f, std::string_view key) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(f)) out.push_back(to_int(Field{item, f.line}, key));
  return out;
}

BettiSequence to_betti(const Field& f, std::string_view key) {
  BettiSequence out;
  for (const auto& item : split_list(f)) {
    if (item == "?") {
      out.push_back(std::nullopt);
    } else {
      out.push_back(to_int(Field{item, f.line}, key));
    }
  }
  if (out.empty()) fail(f.line, std::string(key) + " is empty");
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

ManifoldDescriptor parse_descriptor(std::string_view text) {
  std::map<std::string, Field, std::less<>> fields;
  std::size_t line_no = 0;
  std::istringstream is{std::string(text)};
  std::string raw;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw Error(Errc::unknown_key, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (const auto it = fields.find(key); it != fields.end())
      throw Error(Errc::duplicate_key, "line " + std::to_string(line_no) + ": duplicate key '" + key +
                                           "' (first set on line " + std::to_string(it->second.line) + ")");
    fields.emplace(key, Field{value, line_no});
  }
  for (auto key : kRequired)
    if (!fields.count(key)) throw SyntaxError(line_no, "missing required key '" + std::string(key) + "'");

  auto field = [&](std::string_view key) -> const Field* {
    const auto it = fields.find(key);
    return it == fields.end() ? nullptr : &it->second;
  };

  ManifoldDescriptor m;
  const auto dim = to_int(*field("dim"), "dim");
  if (dim < 0 || dim > 100000) fail(field("dim")->line, "dim out of range");
  m.betti.dim = static_cast<int>(dim);
  m.betti.closed = to_bool(*field("closed"), "closed");
  m.betti.orientable = to_bool(*field("orientable"), "orientable");
  m.betti.betti_z = to_betti(*field("betti_z"), "betti_z");
  m.betti.betti_z2 = to_betti(*field("betti_z2"), "betti_z2");
  if (const auto* f = field("euler")) m.euler = to_int(*f, "euler");
  m.simply_connected = to_bool(*field("simply_connected"), "simply_connected");
  m.torsion_free_homology = to_bool(*field("torsion_free"), "torsion_free");
  m.stably_parallelizable = to_bool(*field("stably_parallelizable"), "stably_parallelizable");
  m.w2_zero = to_bool(*field("w2_zero"), "w2_zero");
  m.bockstein_w2_zero = to_bool(*field("bockstein_w2_zero"), "bockstein_w2_zero");
  m.chars.c1_zero = to_bool(*field("c1_zero"), "c1_zero");
  m.chars.p1_zero = to_bool(*field("p1_zero"), "p1_zero");
  if (const auto* f = field("c_top_pairing")) m.chars.c_top_pairing = to_int(*f, "c_top_pairing");
  if (const auto* f = field("p1_pairings")) m.chars.p1_pairings = to_int_list(*f, "p1_pairings");

  const auto* codim = field("embeds_codim");
  const auto* evidence = field("embeds_evidence");
  if (evidence && !codim) fail(evidence->line, "embeds_evidence without embeds_codim");
  if (codim) {
    Embedding e;
    const auto k = to_int(*codim, "embeds_codim");
    if (k < 0 || k > 100000) fail(codim->line, "embeds_codim out of range");
    e.codim = static_cast<int>(k);
    if (evidence) {
      const auto parsed = parse_evidence(evidence->value);
      if (!parsed) fail(evidence->line, "embeds_evidence must be Asserted, ByConstruction or ByWall");
      e.evidence = *parsed;
    }
    m.embeds = e;
  }

  if (const auto* f = field("pi1")) {
    try {
      m.pi1 = parse_presentation(f->value);
    } catch (const SyntaxError& e) {
      fail(f->line, std::string("pi1: ") + e.what());
    } catch (const Error& e) {
      fail(f->line, std::string("pi1: ") + e.what());
    }
  }

  const auto* lai_n = field("lai.n");
  const auto* lai_p = field("lai.pairings");
  if (static_cast<bool>(lai_n) != static_cast<bool>(lai_p))
    fail((lai_n ? lai_n : lai_p)->line, "lai.n and lai.pairings must be given together");
  if (lai_n) {
    const auto n = to_int(*lai_n, "lai.n");
    if (n < 0 || n > 100000) fail(lai_n->line, "lai.n out of range");
    m.lai = LaiPairingData{static_cast<int>(n), to_int_list(*lai_p, "lai.pairings")};
  }
  return m;
}

std::string format_descriptor(const ManifoldDescriptor& m) {
  std::ostringstream os;
  auto put = [&](std::string_view key, const std::string& value) { os << key << " = " << value << '\n'; };
  auto flag = [](bool x) { return std::string(x ? "true" : "false"); };
  put("dim", std::to_string(m.betti.dim));
  put("closed", flag(m.betti.closed));
  put("orientable", flag(m.betti.orientable));
  put("betti_z", format_betti(m.betti.betti_z));
  put("betti_z2", format_betti(m.betti.betti_z2));
  if (m.euler) put("euler", std::to_string(*m.euler));
  put("simply_connected", flag(m.simply_connected));
  put("torsion_free", flag(m.torsion_free_homology));
  put("stably_parallelizable", flag(m.stably_parallelizable));
  put("w2_zero", flag(m.w2_zero));
  put("bockstein_w2_zero", flag(m.bockstein_w2_zero));
  put("c1_zero", flag(m.chars.c1_zero));
  put("p1_zero", flag(m.chars.p1_zero));
  if (m.chars.c_top_pairing) put("c_top_pairing", std::to_string(*m.chars.c_top_pairing));
  if (m.chars.p1_pairings) put("p1_pairings", join(*m.chars.p1_pairings));
  if (m.embeds) {
    put("embeds_codim", std::to_string(m.embeds->codim));
    put("embeds_evidence", std::string(to_string(m.embeds->evidence)));
  }
  if (m.pi1) put("pi1", to_string(*m.pi1));
  if (m.lai) {
    put("lai.n", std::to_string(m.lai->n));
    put("lai.pairings", join(m.lai->pairings));
  }
  std::string out = os.str();
  // An empty list value leaves a trailing space after '='.
  std::string cleaned;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) cleaned += std::string(trim(line)) + '\n';
  return cleaned;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ManifoldDescriptor read_descriptor(const std::filesystem::path& path) { return parse_descriptor(read_text_file(path)); }

void write_descriptor(const ManifoldDescriptor& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  out << format_descriptor(m);
}

}  // namespace parembed
