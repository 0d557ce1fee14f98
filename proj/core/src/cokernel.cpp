#include "fermatiq/cokernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fermatiq/abelian.hpp"

namespace fermatiq {

namespace {

struct CosetDecomposition {
    QuotientRing ring;
    std::vector<OkElement> units;             // all unit residues mod q^3
    std::set<std::string> subgroup;           // keys of H = squares * Phi(units)
    std::int64_t squares_order = 0;
    std::vector<std::vector<OkElement>> cosets;  // partition of the units by H
    std::map<std::string, std::size_t> coset_of;

    explicit CosetDecomposition(const Field& field)
        : ring(inert_prime_above_2(field).generator().pow(3)) {
        PrimeIdeal q = inert_prime_above_2(field);
        for (auto& r : ring.residues()) {
            if (!q.divides(r)) units.push_back(r);
        }
        auto key = [](const OkElement& e) { return e.x().get_str() + "|" + e.y().get_str(); };

        std::set<std::string> squares;
        std::vector<OkElement> square_elts;
        for (auto& u : units) {
            OkElement s = ring.mul(u, u);
            if (squares.insert(key(s)).second) square_elts.push_back(s);
        }
        squares_order = static_cast<std::int64_t>(square_elts.size());

        // H = squares * (global units mod q^3); a product of subgroups is a
        // subgroup here, so one pass of pairwise products is enough.
        std::vector<OkElement> h_elts;
        for (auto& s : square_elts) {
            for (auto& u : fermatiq::units(field)) {
                OkElement h = ring.mul(s, ring.reduce(u));
                if (subgroup.insert(key(h)).second) h_elts.push_back(h);
            }
        }

        std::set<std::string> assigned;
        for (auto& u : units) {
            if (assigned.count(key(u))) continue;
            std::vector<OkElement> coset;
            for (auto& h : h_elts) {
                OkElement e = ring.mul(u, h);
                if (assigned.insert(key(e)).second) coset.push_back(e);
            }
            std::sort(coset.begin(), coset.end(), [](const OkElement& a, const OkElement& b) {
                return std::make_tuple(abs(a.y()), abs(a.x()), a.y() < 0, a.x() < 0) <
                       std::make_tuple(abs(b.y()), abs(b.x()), b.y() < 0, b.x() < 0);
            });
            for (auto& e : coset) coset_of[key(e)] = cosets.size();
            cosets.push_back(std::move(coset));
        }
        // Put the trivial coset first, then order by canonical representative.
        std::stable_sort(cosets.begin(), cosets.end(),
                         [](const std::vector<OkElement>& a, const std::vector<OkElement>& b) {
                             auto keyof = [](const OkElement& e) {
                                 return std::make_tuple(abs(e.y()), abs(e.x()), e.y() < 0,
                                                        e.x() < 0);
                             };
                             return keyof(a.front()) < keyof(b.front());
                         });
        coset_of.clear();
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            for (auto& e : cosets[i]) coset_of[key(e)] = i;
        }
    }

    std::size_t coset_index(const OkElement& residue) const {
        return coset_of.at(residue.x().get_str() + "|" + residue.y().get_str());
    }
};

}  // namespace

CokernelReport cokernel_phi(const Field& field) {
    CosetDecomposition dec(field);
    CokernelReport report;
    report.d = field.d();
    report.unit_group_order = static_cast<std::int64_t>(dec.units.size());

    PrimeIdeal q = inert_prime_above_2(field);
    report.unit_group_structure = quotient_unit_group(q, 3).structure;
    report.squares_order = dec.squares_order;
    report.image_order =
        static_cast<std::int64_t>(dec.subgroup.size()) / dec.squares_order;

    // Invariant factors of the cokernel, multiplying cosets through their
    // representatives.
    std::vector<std::size_t> ids(dec.cosets.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    auto mul = [&](std::size_t i, std::size_t j) {
        return dec.coset_index(dec.ring.mul(dec.cosets[i].front(), dec.cosets[j].front()));
    };
    report.cokernel_structure = invariant_factors<std::size_t>(
        ids, mul, dec.coset_index(dec.ring.reduce(OkElement::one(field))),
        [](std::size_t i) { return std::to_string(i); });

    for (auto& coset : dec.cosets) report.representatives.push_back(coset.front());
    return report;
}

bool verify_cokernel_representatives(const Field& field, const std::vector<OkElement>& reps,
                                     std::string* diagnostic) {
    CosetDecomposition dec(field);
    PrimeIdeal q = inert_prime_above_2(field);
    std::set<std::size_t> seen;
    for (auto& rep : reps) {
        OkElement r = dec.ring.reduce(rep);
        if (q.divides(r)) {
            if (diagnostic) *diagnostic = rep.str() + " is not a unit mod q^3";
            return false;
        }
        std::size_t idx = dec.coset_index(r);
        if (!seen.insert(idx).second) {
            if (diagnostic) *diagnostic = rep.str() + " repeats coset " + std::to_string(idx);
            return false;
        }
    }
    if (seen.size() != dec.cosets.size()) {
        if (diagnostic) {
            *diagnostic = "covers " + std::to_string(seen.size()) + " of " +
                          std::to_string(dec.cosets.size()) + " cosets";
        }
        return false;
    }
    if (diagnostic) diagnostic->clear();
    return true;
}

}  // namespace fermatiq
