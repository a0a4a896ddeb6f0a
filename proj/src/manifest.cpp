#include <qturan/manifest.hpp>

#include <qturan/errors.hpp>

#include <fstream>
#include <sstream>

namespace qturan {

namespace {

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(long line, const std::string& what) {
    throw grid_error("manifest line " + std::to_string(line) + ": " + what);
}

} // namespace

bool ManifestSection::has(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return true;
    return false;
}

const std::string& ManifestSection::raw(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw grid_error("manifest: section [" + name + "] has no key \"" + key + "\"");
}

std::vector<std::string> ManifestSection::strings(const std::string& key) const {
    std::istringstream in(raw(key));
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<Rational> ManifestSection::rationals(const std::string& key) const {
    std::vector<Rational> out;
    for (const std::string& tok : strings(key)) {
        try {
            out.push_back(Rational::parse(tok));
        } catch (const std::exception&) {
            throw grid_error("manifest: section [" + name + "], key \"" + key +
                             "\": not a rational: " + tok);
        }
    }
    return out;
}

Rational ManifestSection::rational(const std::string& key) const {
    const std::vector<Rational> vals = rationals(key);
    if (vals.size() != 1)
        throw grid_error("manifest: section [" + name + "], key \"" + key +
                         "\": expected exactly one value");
    return vals[0];
}

long ManifestSection::integer(const std::string& key) const {
    const Rational v = rational(key);
    if (!v.is_integer())
        throw grid_error("manifest: section [" + name + "], key \"" + key +
                         "\": expected an integer");
    return v.to_long();
}

bool Manifest::has_section(const std::string& name) const {
    for (const ManifestSection& s : sections)
        if (s.name == name) return true;
    return false;
}

const ManifestSection& Manifest::section(const std::string& name) const {
    for (const ManifestSection& s : sections)
        if (s.name == name) return s;
    throw grid_error("manifest: no section [" + name + "]");
}

Manifest parse_manifest(const std::string& text) {
    Manifest man;
    bool saw_version = false;
    ManifestSection* current = nullptr;
    std::istringstream in(text);
    std::string raw_line;
    long lineno = 0;
    while (std::getline(in, raw_line)) {
        ++lineno;
        const auto hash = raw_line.find('#');
        std::string line = strip(hash == std::string::npos ? raw_line : raw_line.substr(0, hash));
        if (is_blank(line)) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(lineno, "unterminated section header");
            const std::string name = strip(line.substr(1, line.size() - 2));
            if (name.empty()) fail(lineno, "empty section name");
            if (man.has_section(name)) fail(lineno, "duplicate section [" + name + "]");
            man.sections.push_back(ManifestSection{name, {}});
            current = &man.sections.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "empty key");
        if (!current) {
            if (key != "version") fail(lineno, "only \"version\" may precede the first section");
            if (saw_version) fail(lineno, "duplicate version line");
            try {
                man.version = std::stol(value);
            } catch (const std::exception&) {
                fail(lineno, "version must be an integer");
            }
            saw_version = true;
            continue;
        }
        for (const auto& [k, v] : current->entries)
            if (k == key) fail(lineno, "duplicate key \"" + key + "\" in [" + current->name + "]");
        current->entries.emplace_back(key, value);
    }
    if (!saw_version) throw grid_error("manifest: missing version line");
    return man;
}

Manifest load_manifest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw grid_error("manifest: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

namespace {

const char kDefaultManifestText[] = R"MANIFEST(# Parameter grids for the qturan verification suites.
#
# The library embeds this text; the build checks that this file has not
# drifted from the embedded copy.  Bump the version when grids change.
version = 1

[theorem-quads]
# Quadruples (a, a*s, a*t, a*s*t) with a, s, t drawn from the token list,
# evaluated per base value of q.  Shared by the positivity suite for the
# numerator family F (T1) and the negativity suites for the gamma-numerator
# family D (T2) and the denominator family H (T4).
q = 1/10 1/2 9/10
tokens = q q^2 1/2 1/3
# ones       : b_n = 1
# inv-qpoch  : b_n = 1/(q;q)_n
# poch-ratio : b_n = (q^2;q)_n/(q;q)_n = (1-q^(n+1))/(1-q)
bases = ones inv-qpoch poch-ratio
order = 32

[family-g]
# Grid for the gamma-denominator family G (T3).  The squares 1/4, 4/9 and
# 81/100 keep q^(1/2) rational, so half-integer exponents stay exact.
q = 1/10 1/2 9/10 1/4 4/9 81/100
alpha = 1 2
beta = 1/2 1 2
mu = 0 1/2 1
order = 32
diag-order = 20

[bounds]
# Two-sided bound sandwiches, one report per family.
q = 1/2
mu = 1
alpha = 1
beta = 2
base-f = ones
base-d = inv-qpoch
base-g = ones
base-h = ones
# x points as fractions of the certified radius lower bound; 0 probes the
# equality case.
x-fractions = 0 1/16 1/8 3/16 1/4 5/16 3/8 1/2
order = 32

[bessel]
# Turan sandwich for the two modified q-Bessel variants.  Variant 1 has
# radius 2 in y; variant 2 is entire and capped at 4.
q = 1/2
nu = 1/2 1 2
variant-1-y = 2/11 4/11 6/11 8/11 10/11 12/11 14/11 16/11 18/11 20/11
variant-2-y = 4/11 8/11 12/11 16/11 20/11 24/11 28/11 32/11 36/11 40/11
order = 32
# Classical limit: variant 1 at q -> 1 against the modified Bessel series.
limit-q = 999/1000
limit-nu = 1
limit-y = 1
limit-order = 24

[identities]
vandermonde-samples = 50
vandermonde-order = 16
qbinomial-samples = 50
qbinomial-order = 20
heine-samples = 20
heine-order = 48

[duality]
tuples = 20
order = 32

[conjecture]
# Non-integer alpha samples for the open question; beta/mu/q cycle through
# the family-g grid.  alpha = 1 and alpha = 2 rows are controls.
samples = 200
alpha-min = 0
alpha-max = 3
order = 32

[seqprops]
# Three-point multiplicative-convexity grids (geometric in x, factor
# gg-step) and uniform grids in y for the order-4 alternating-difference
# check of y -> Delta(1/y).  The D grids sit deeper inside the radius
# because that family's weights grow fastest.
q = 1/2
mu = 1
alpha = 1
beta = 2
gg-step = 1/2
gg-x-f = 1/512 1/256 1/128 1/64 1/32 1/16 1/8 1/4
gg-x-d = 1/4096 1/2048 1/1024 1/512 1/256 1/128 1/64 1/32
gg-x-g = 1/512 1/256 1/128 1/64 1/32 1/16 1/8 1/4
gg-x-h = 1/512 1/256 1/128 1/64 1/32 1/16 1/8 1/4
# Value-direction three-point grids (series value a as the variable).
gg-a-points = 1/512 1/256 1/128 1/64 1/32 1/16 1/8 1/4
gg-a-x-f = 1/2
gg-a-x-h = 1/4
cm-order = 4
cm-y-f = 3/2 7/4 2 9/4 5/2 11/4 3 13/4 7/2 15/4 4 17/4
cm-y-d = 5 6 7 8 9 10 11 12 13 14 15 16
cm-y-g = 3/2 7/4 2 9/4 5/2 11/4 3 13/4 7/2 15/4 4 17/4
cm-y-h = 3/2 7/4 2 9/4 5/2 11/4 3 13/4 7/2 15/4 4 17/4
order = 32

[kummer]
# Confluent-series examples: double positivity plus parameter-direction
# concavity probes at shift pairs t:m (integer t >= m >= 1).
q = 1/2
b = 1/3
x = 1/2
pairs = 1:1 2:1 2:2 3:2
order = 32
)MANIFEST";

} // namespace

const std::string& default_manifest_text() {
    static const std::string text = kDefaultManifestText;
    return text;
}

const Manifest& default_manifest() {
    static const Manifest man = parse_manifest(default_manifest_text());
    return man;
}

} // namespace qturan
