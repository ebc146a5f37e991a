#include "nt/config.hpp"

#include "nt/errors.hpp"

#include <fstream>
#include <sstream>

namespace nt {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_any(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

long to_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + what + ": '" + s + "'");
    }
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + what + ": '" + s + "'");
    }
}

AlgInt to_alg(const std::string& s, const std::string& what) {
    auto parts = split_any(s, ",");
    if (parts.empty() || parts.size() > 2) throw ConfigError("bad element for " + what + ": '" + s + "'");
    long x = to_long(parts[0], what);
    long y = parts.size() == 2 ? to_long(parts[1], what) : 0;
    return AlgInt(BigInt(x), BigInt(y));
}

DatumSpec parse_datum(const std::string& v) {
    DatumSpec d;
    bool have_p = false, have_rho = false;
    for (const auto& tok : split_any(v, " \t")) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ConfigError("datum field without ':': '" + tok + "'");
        std::string k = tok.substr(0, colon), val = tok.substr(colon + 1);
        if (k == "p") {
            long p = to_long(val, "datum p");
            if (p < 2) throw ConfigError("datum p must be a prime");
            d.p = static_cast<u64>(p);
            have_p = true;
        } else if (k == "index") {
            d.index = static_cast<unsigned>(to_long(val, "datum index"));
        } else if (k == "h") {
            d.h = static_cast<unsigned>(to_long(val, "datum h"));
        } else if (k == "rho") {
            d.rho = to_alg(val, "datum rho");
            have_rho = true;
        } else if (k == "k") {
            long kk = to_long(val, "datum k");
            if (kk < 0) throw ConfigError("datum k must be >= 0");
            d.k = static_cast<unsigned>(kk);
        } else if (k == "u") {
            d.u = to_alg(val, "datum u");
        } else if (k == "tau") {
            d.tau = to_alg(val, "datum tau");
        } else {
            throw ConfigError("unknown datum field '" + k + "'");
        }
    }
    if (!have_p) throw ConfigError("datum needs p");
    if (!is_prime_u64(d.p)) throw ConfigError("datum p is not prime");
    if (!have_rho) d.rho = AlgInt(static_cast<long>(d.p));
    return d;
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    cfg.origin_ = origin;
    std::string kind = "rational";
    std::optional<long> m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key");
        try {
            if (key == "kind") {
                if (val != "rational" && val != "quadratic") fail("kind must be rational or quadratic");
                kind = val;
            } else if (key == "m") {
                m = to_long(val, "m");
            } else if (key == "unit") {
                cfg.unit_ = to_alg(val, "unit");
            } else if (key == "datum") {
                cfg.data_.push_back(parse_datum(val));
            } else {
                cfg.params_[key].push_back(val);
            }
        } catch (const ConfigError& e) {
            std::string w = e.what();
            if (w.rfind(origin, 0) == 0) throw;
            fail(w);
        }
    }
    try {
        if (kind == "quadratic") {
            if (!m) throw ConfigError("quadratic field needs m");
            cfg.field_ = Field::real_quadratic(*m);
        } else if (m) {
            throw ConfigError("m given for the rational field");
        }
        if (cfg.unit_) {
            if (cfg.field_.is_rational()) throw ConfigError("unit override needs a quadratic field");
            if (!cfg.field_.is_unit(*cfg.unit_)) throw ConfigError("unit override is not a unit");
        }
        for (const auto& d : cfg.data_) (void)cfg.datum(d);
    } catch (const InvalidInput& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path);
}

EllipticDatum RunConfig::datum(const DatumSpec& s) const {
    auto ps = field_.primes_above(s.p);
    if (s.index >= ps.size()) throw ConfigError("datum index out of range for p = " + std::to_string(s.p));
    try {
        return EllipticDatum::make(field_, ps[s.index], s.h, s.rho, s.k, s.u, s.tau);
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string("invalid datum: ") + e.what());
    }
}

std::vector<EllipticDatum> RunConfig::data() const {
    std::vector<EllipticDatum> out;
    for (const auto& s : data_) out.push_back(datum(s));
    return out;
}

std::string RunConfig::get(const std::string& key, const std::string& def) const {
    auto it = params_.find(key);
    return it == params_.end() ? def : it->second.back();
}

double RunConfig::get_double(const std::string& key, double def) const {
    auto it = params_.find(key);
    return it == params_.end() ? def : to_double(it->second.back(), key);
}

long RunConfig::get_int(const std::string& key, long def) const {
    auto it = params_.find(key);
    return it == params_.end() ? def : to_long(it->second.back(), key);
}

std::vector<i64> RunConfig::get_ints(const std::string& key) const {
    std::vector<i64> out;
    auto it = params_.find(key);
    if (it == params_.end()) return out;
    for (const auto& v : it->second)
        for (const auto& t : split_any(v, ", \t")) out.push_back(to_long(t, key));
    return out;
}

std::vector<double> RunConfig::get_doubles(const std::string& key) const {
    std::vector<double> out;
    auto it = params_.find(key);
    if (it == params_.end()) return out;
    for (const auto& v : it->second)
        for (const auto& t : split_any(v, ", \t")) out.push_back(to_double(t, key));
    return out;
}

std::vector<std::string> RunConfig::get_strings(const std::string& key) const {
    std::vector<std::string> out;
    auto it = params_.find(key);
    if (it == params_.end()) return out;
    for (const auto& v : it->second)
        for (const auto& t : split_any(v, ", \t")) out.push_back(t);
    return out;
}

}  // namespace nt
