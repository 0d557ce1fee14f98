#include "fermatiq/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "fermatiq/factor.hpp"

namespace fermatiq {

namespace {

using nlohmann::json;

mpz_class json_to_mpz(const json& v) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw std::invalid_argument("dataset: expected integer or integer string");
}

// Large coefficients fall back to decimal strings.
json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

NewformRecord load_newform(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("dataset: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument("dataset: " + path + ": " + e.what());
    }
    try {
        const Field& K = make_field(doc.at("d").get<int>());

        const json& level = doc.at("level");
        const json& gen = level.at("generator");
        if (!gen.is_array() || gen.size() != 2) {
            throw std::invalid_argument("level generator must be a coordinate pair");
        }
        OkElement g(K, json_to_mpz(gen[0]), json_to_mpz(gen[1]));
        mpz_class gnorm = g.norm();
        if (!gnorm.fits_slong_p()) throw std::invalid_argument("level generator norm too large");
        auto support = prime_support(gnorm);  // norm is l or l^2 for a prime ideal
        if (support.size() != 1) {
            throw std::invalid_argument("level generator does not generate a prime ideal");
        }
        const std::int64_t l = support[0];
        PrimeIdeal level_prime = [&] {
            for (auto& P : split_prime(K, l)) {
                if (P.generator() == g) return P;
            }
            throw std::invalid_argument("level generator " + g.str() +
                                        " is not a canonical prime generator");
        }();

        std::vector<mpz_class> poly;
        for (const auto& c : doc.at("min_poly")) poly.push_back(json_to_mpz(c));
        HeckeField Qf(poly);

        NewformRecord rec{make_field(doc.at("d").get<int>()).d(), level_prime,
                          level.at("exponent").get<int>(), Qf, {},
                          std::filesystem::path(path).filename().string()};

        for (const auto& ev : doc.at("eigenvalues")) {
            std::string label = ev.at("prime").get<std::string>();
            std::vector<mpz_class> coeffs;
            for (const auto& c : ev.at("a")) coeffs.push_back(json_to_mpz(c));
            if (static_cast<int>(coeffs.size()) > Qf.degree()) {
                throw std::invalid_argument("eigenvalue at " + label +
                                            " has more coordinates than the field degree");
            }
            if (!rec.eigenvalues.emplace(label, HeckeElement(Qf, coeffs)).second) {
                throw std::invalid_argument("duplicate eigenvalue prime " + label);
            }
        }
        validate_newform(rec);
        return rec;
    } catch (const json::exception& e) {
        throw std::invalid_argument("dataset: " + path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("dataset: " + path + ": " + e.what());
    }
}

std::vector<NewformRecord> load_dataset(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw std::invalid_argument("dataset: " + dir + " is not a directory");
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<NewformRecord> out;
    for (const auto& f : files) out.push_back(load_newform(f));
    if (out.empty()) throw std::invalid_argument("dataset: no newforms in " + dir);
    return out;
}

std::string newform_to_json(const NewformRecord& f) {
    json doc;
    doc["d"] = f.field_d;
    doc["level"]["generator"] = {f.level_prime.generator().x().get_si(),
                                 f.level_prime.generator().y().get_si()};
    doc["level"]["exponent"] = f.level_exponent;
    json poly = json::array();
    for (const auto& c : f.hecke_field.min_poly()) poly.push_back(mpz_to_json(c));
    doc["min_poly"] = poly;
    json evs = json::array();
    for (const auto& [label, a] : f.eigenvalues) {
        json ev;
        ev["prime"] = label;
        json coeffs = json::array();
        for (const auto& c : a.coeffs()) coeffs.push_back(mpz_to_json(c));
        ev["a"] = coeffs;
        evs.push_back(ev);
    }
    doc["eigenvalues"] = evs;
    return doc.dump(2) + "\n";
}

}  // namespace fermatiq
