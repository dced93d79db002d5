#include "cag/circle.hpp"

#include "cag/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cag {

Rational ccw_delta(const Angle& from, const Angle& to) {
    return (to.turns() - from.turns()).mod1();
}

Arc Arc::full_circle() {
    Arc a;
    a.full_ = true;
    return a;
}

Arc Arc::span(const Angle& start, const Angle& end) {
    Arc a;
    a.full_ = false;
    a.start_ = start;
    a.end_ = end;
    return a;
}

Rational Arc::length() const {
    if (full_) return Rational(1);
    return ccw_delta(start_, end_);
}

bool Arc::contains(const Angle& a) const {
    if (full_) return true;
    return ccw_delta(start_, a) <= ccw_delta(start_, end_);
}

bool Arc::contains_arc(const Arc& other) const {
    if (full_) return true;
    if (other.full_) return false;
    // Unroll the other arc from this arc's start; it fits iff it begins
    // inside and does not run past the end.
    Rational off = ccw_delta(start_, other.start_);
    return off <= length() && off + other.length() <= length();
}

bool intersects(const Arc& a, const Arc& b) {
    if (a.is_full() || b.is_full()) return true;
    // Closed arcs meet iff one contains an endpoint of the other.
    return a.contains(b.start()) || a.contains(b.end()) ||
           b.contains(a.start()) || b.contains(a.end());
}

void ArcFamily::push_back(Arc arc, std::string label) {
    arcs.push_back(arc);
    labels.push_back(std::move(label));
}

void ArcFamily::validate() const {
    if (arcs.size() != labels.size()) {
        throw input_error("arc family: arcs and labels out of sync");
    }
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw input_error("arc family: empty label");
        for (size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw input_error("arc family: duplicate label '" + labels[i] + "'");
            }
        }
    }
}

namespace {

// The union of finitely many closed arcs fails to cover the circle iff
// some maximal uncovered open interval exists; such an interval is
// bounded by arc endpoints. Probing every endpoint plus the midpoint of
// every consecutive endpoint gap therefore decides coverage exactly.
std::vector<Angle> coverage_probes(const ArcFamily& fam) {
    std::vector<Rational> points;
    for (const Arc& a : fam.arcs) {
        if (a.is_full()) continue;
        points.push_back(a.start().turns());
        points.push_back(a.end().turns());
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Angle> probes;
    for (size_t i = 0; i < points.size(); ++i) {
        probes.emplace_back(points[i]);
        const Rational& lo = points[i];
        Rational hi = (i + 1 < points.size()) ? points[i + 1] : points[0] + Rational(1);
        if (hi > lo) probes.emplace_back((lo + hi) / Rational(2));
    }
    return probes;
}

bool covered(const ArcFamily& fam, const Angle& a) {
    for (const Arc& arc : fam.arcs) {
        if (arc.contains(a)) return true;
    }
    return false;
}

}  // namespace

bool covers_circle(const ArcFamily& fam) {
    return !uncovered_point(fam).has_value();
}

std::optional<Angle> uncovered_point(const ArcFamily& fam) {
    for (const Arc& a : fam.arcs) {
        if (a.is_full()) return std::nullopt;
    }
    std::vector<Angle> probes = coverage_probes(fam);
    if (probes.empty()) return Angle(Rational(0));  // no arcs at all
    std::optional<Angle> best;
    for (const Angle& p : probes) {
        if (!covered(fam, p) && (!best || p < *best)) best = p;
    }
    return best;
}

ArcFamily read_arc_family(std::istream& in) {
    ArcFamily fam;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string label, first, second;
        if (!(ls >> label)) continue;  // blank or comment-only line
        if (!(ls >> first)) {
            throw input_error("arc file line " + std::to_string(lineno) + ": missing arc body");
        }
        if (first == "full") {
            fam.push_back(Arc::full_circle(), label);
        } else {
            if (!(ls >> second)) {
                throw input_error("arc file line " + std::to_string(lineno) + ": missing end angle");
            }
            try {
                fam.push_back(Arc::span(Angle(Rational::parse(first)), Angle(Rational::parse(second))),
                              label);
            } catch (const std::invalid_argument& e) {
                throw input_error("arc file line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        std::string extra;
        if (ls >> extra) {
            throw input_error("arc file line " + std::to_string(lineno) + ": trailing tokens");
        }
    }
    fam.validate();
    return fam;
}

ArcFamily read_arc_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open arc file '" + path + "'");
    return read_arc_family(in);
}

void write_arc_family(std::ostream& out, const ArcFamily& fam) {
    for (size_t i = 0; i < fam.size(); ++i) {
        const Arc& a = fam.arcs[i];
        if (a.is_full()) {
            out << fam.labels[i] << " full\n";
        } else {
            out << fam.labels[i] << ' ' << a.start().turns().str() << ' '
                << a.end().turns().str() << '\n';
        }
    }
}

std::string arc_family_to_string(const ArcFamily& fam) {
    std::ostringstream out;
    write_arc_family(out, fam);
    return out.str();
}

}  // namespace cag
