#include "steinberg/certificate_io.hpp"

#include <set>
#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

std::set<std::uint32_t> levels_used(const Certificate& cert) {
  std::set<std::uint32_t> out{1};
  for (const auto& [coords, _] : cert.input.terms)
    for (const auto& c : coords) out.insert(c.level);
  for (const auto& step : cert.steps)
    for (const auto& [g, _] : step.terms) out.insert(g.level());
  return out;
}

void expect(std::istringstream& in, const std::string& key) {
  std::string word;
  if (!(in >> word) || word != key) throw ValidationError("certificate: expected '" + key + "', got '" + word + "'");
}

template <typename T>
T read_value(std::istringstream& in, const std::string& what) {
  T v{};
  if (!(in >> v)) throw ValidationError("certificate: could not read " + what);
  return v;
}

FieldElement parse_element(const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos) throw ValidationError("certificate: bad field element '" + token + "'");
  try {
    return {static_cast<std::uint32_t>(std::stoul(token.substr(0, colon))),
            static_cast<std::uint32_t>(std::stoul(token.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw ValidationError("certificate: bad field element '" + token + "'");
  }
}

}  // namespace

std::string write_certificate(const Certificate& cert, const FieldTower& tower) {
  std::ostringstream os;
  os << "steinberg-certificate 1\n";
  os << "n " << cert.n << "\n";
  os << "q " << cert.p << "^" << cert.d << "\n";
  os << "a " << cert.a << "\n";
  os << "ell " << cert.ell << "\n";
  os << "w0";
  for (auto s : cert.w0_word) os << " " << s + 1;
  os << "\n";
  for (auto level : levels_used(cert)) {
    os << "poly " << level;
    for (auto c : tower.polynomial(level)) os << " " << c;
    os << "\n";
  }
  os << "claimed " << cert.claimed_scalar << "\n";
  os << "max_level " << cert.max_level << "\n";
  os << "max_entry_level " << cert.max_entry_level << "\n";
  os << "input " << cert.input.size() << "\n";
  for (const auto& [coords, c] : cert.input.terms) {
    os << c;
    for (const auto& x : coords) os << " " << x.level << ":" << x.value;
    os << "\n";
  }
  os << "steps " << cert.steps.size() << "\n";
  for (const auto& step : cert.steps) {
    os << "step " << step.terms.size() << " " << step.role << "\n";
    for (const auto& [g, c] : step.terms) {
      os << c << " " << g.level();
      for (auto e : g.raw()) os << " " << e;
      os << "\n";
    }
  }
  return os.str();
}

Certificate read_certificate(std::string_view text, const FieldTower& tower) {
  std::istringstream all{std::string(text)};
  std::string line;
  auto next_line = [&]() -> std::istringstream {
    if (!std::getline(all, line)) throw ValidationError("certificate: unexpected end of input");
    return std::istringstream(line);
  };

  Certificate cert;
  {
    auto in = next_line();
    expect(in, "steinberg-certificate");
    if (read_value<int>(in, "version") != 1) throw ValidationError("certificate: unsupported version");
  }
  {
    auto in = next_line();
    expect(in, "n");
    cert.n = read_value<std::uint32_t>(in, "n");
    if (cert.n < 2 || cert.n > 6) throw ValidationError("certificate: n out of range");
  }
  {
    auto in = next_line();
    expect(in, "q");
    const auto token = read_value<std::string>(in, "q");
    const auto caret = token.find('^');
    if (caret == std::string::npos) throw ValidationError("certificate: q must be written p^d");
    cert.p = static_cast<std::uint32_t>(std::stoul(token.substr(0, caret)));
    cert.d = static_cast<std::uint32_t>(std::stoul(token.substr(caret + 1)));
    if (cert.p != tower.p() || cert.d != tower.d()) throw ValidationError("certificate: q differs from the tower");
  }
  {
    auto in = next_line();
    expect(in, "a");
    cert.a = read_value<std::uint32_t>(in, "a");
  }
  {
    auto in = next_line();
    expect(in, "ell");
    cert.ell = read_value<std::uint32_t>(in, "ell");
  }
  {
    auto in = next_line();
    expect(in, "w0");
    std::uint32_t s;
    while (in >> s) {
      if (s < 1 || s >= cert.n) throw ValidationError("certificate: bad w0 letter");
      cert.w0_word.push_back(s - 1);
    }
  }
  for (;;) {
    auto in = next_line();
    std::string key;
    in >> key;
    if (key == "poly") {
      const auto level = read_value<std::uint32_t>(in, "poly level");
      std::vector<std::uint32_t> coeffs;
      std::uint32_t c;
      while (in >> c) coeffs.push_back(c);
      if (level == 0 || coeffs != tower.polynomial(level))
        throw ValidationError("certificate: polynomial at level " + std::to_string(level) + " differs from the tower");
      continue;
    }
    if (key != "claimed") throw ValidationError("certificate: expected 'claimed'");
    cert.claimed_scalar = read_value<Scalar>(in, "claimed scalar");
    break;
  }
  {
    auto in = next_line();
    expect(in, "max_level");
    cert.max_level = read_value<std::uint32_t>(in, "max_level");
  }
  {
    auto in = next_line();
    expect(in, "max_entry_level");
    cert.max_entry_level = read_value<std::uint32_t>(in, "max_entry_level");
  }
  const std::uint32_t r = cert.n * (cert.n - 1) / 2;
  std::size_t count;
  {
    auto in = next_line();
    expect(in, "input");
    count = read_value<std::size_t>(in, "input count");
  }
  for (std::size_t t = 0; t < count; ++t) {
    auto in = next_line();
    const auto c = read_value<Scalar>(in, "input scalar");
    UCoords coords;
    std::string token;
    while (in >> token) coords.push_back(parse_element(token));
    if (coords.size() != r) throw ValidationError("certificate: input term has the wrong number of coordinates");
    cert.input.terms.emplace(std::move(coords), c);
  }
  {
    auto in = next_line();
    expect(in, "steps");
    count = read_value<std::size_t>(in, "step count");
  }
  for (std::size_t s = 0; s < count; ++s) {
    auto in = next_line();
    expect(in, "step");
    const auto terms = read_value<std::size_t>(in, "term count");
    Multiplier m;
    std::getline(in >> std::ws, m.role);
    for (std::size_t t = 0; t < terms; ++t) {
      auto row = next_line();
      const auto c = read_value<Scalar>(row, "term scalar");
      const auto level = read_value<std::uint32_t>(row, "term level");
      std::vector<std::uint32_t> entries;
      std::uint32_t e;
      while (row >> e) entries.push_back(e);
      if (entries.size() != cert.n * cert.n) throw ValidationError("certificate: matrix has the wrong size");
      if (level == 0 || level > 64) throw ValidationError("certificate: bad matrix level");
      for (auto x : entries)
        if (x >= tower.size(level)) throw ValidationError("certificate: matrix entry out of range");
      m.terms.emplace_back(GroupElement(cert.n, level, std::move(entries)), c);
    }
    cert.steps.push_back(std::move(m));
  }
  return cert;
}

}  // namespace steinberg
