#pragma once

#include "nt/elliptic.hpp"
#include "nt/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nt {

// Line format, '#' starts a comment:
//   kind  = rational | quadratic
//   m     = 33                      (quadratic only, squarefree > 1)
//   unit  = 19,8                    (optional override of the fundamental unit, coordinates in 1, omega)
//   datum = p:2 index:0 h:1 rho:2,1 k:2 [u:1,0] [tau:0,0]   (repeatable)
// Any other key is kept as a suite parameter; repeated keys accumulate.
struct DatumSpec {
    u64 p = 0;
    unsigned index = 0;
    unsigned h = 1;
    AlgInt rho{0};
    unsigned k = 1;
    AlgInt u{1};
    AlgInt tau{0};
};

class RunConfig {
public:
    static RunConfig parse(const std::string& text, const std::string& origin = "<string>");
    static RunConfig load(const std::string& path);

    const Field& field() const { return field_; }
    const std::optional<AlgInt>& unit() const { return unit_; }
    const std::vector<DatumSpec>& datum_specs() const { return data_; }
    std::vector<EllipticDatum> data() const;
    EllipticDatum datum(const DatumSpec& s) const;

    bool has(const std::string& key) const { return params_.count(key) > 0; }
    std::string get(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    long get_int(const std::string& key, long def) const;
    // comma or space separated integers, accumulated over repeated keys
    std::vector<i64> get_ints(const std::string& key) const;
    std::vector<double> get_doubles(const std::string& key) const;
    std::vector<std::string> get_strings(const std::string& key) const;
    const std::string& origin() const { return origin_; }

private:
    Field field_ = Field::rationals();
    std::optional<AlgInt> unit_;
    std::vector<DatumSpec> data_;
    std::map<std::string, std::vector<std::string>> params_;
    std::string origin_;
};

}  // namespace nt
