#include "ft/manifold.hpp"

#include "ft/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ft {

using ordered_json = nlohmann::ordered_json;

ManifoldCohomology::ManifoldCohomology(std::string name, int dim,
                                       std::vector<CohomologyClass> classes,
                                       const std::vector<CupEntry>& cup)
    : name_(std::move(name)), dim_(dim), classes_(std::move(classes))
{
    if (dim_ <= 0)
        throw validation_error("manifold '" + name_ + "': dimension must be positive");
    if (classes_.empty())
        throw validation_error("manifold '" + name_ + "': no cohomology classes");
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].degree < 0)
            throw validation_error("manifold '" + name_ + "': class '" + classes_[i].name +
                                   "' has negative degree");
        for (std::size_t j = i + 1; j < classes_.size(); ++j)
            if (classes_[i].name == classes_[j].name)
                throw validation_error("manifold '" + name_ + "': duplicate class '" +
                                       classes_[i].name + "'");
    }

    std::size_t units = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].degree == 0) {
            unit_ = i;
            ++units;
        }
    }
    if (units != 1)
        throw validation_error("manifold '" + name_ + "': expected exactly one degree-0 class, found " +
                               std::to_string(units));

    const std::size_t n = classes_.size();
    cup_.assign(n * n * n, Rational(0));

    // implied unit products
    for (std::size_t j = 0; j < n; ++j) {
        cup_ref(unit_, j, j) = 1;
        cup_ref(j, unit_, j) = 1;
    }
    for (const CupEntry& e : cup) {
        if (e.left >= n || e.right >= n || e.result >= n)
            throw validation_error("manifold '" + name_ + "': cup entry index out of range");
        cup_ref(e.left, e.right, e.result) = e.coefficient;
    }

    validate();
}

Rational& ManifoldCohomology::cup_ref(std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = classes_.size();
    return cup_[(i * n + j) * n + k];
}

const Rational& ManifoldCohomology::cup(std::size_t i, std::size_t j, std::size_t k) const
{
    const std::size_t n = classes_.size();
    if (i >= n || j >= n || k >= n)
        throw usage_error("cup index out of range");
    return cup_[(i * n + j) * n + k];
}

std::size_t ManifoldCohomology::index_of(const std::string& class_name) const
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].name == class_name)
            return i;
    throw validation_error("manifold '" + name_ + "': unknown class '" + class_name + "'");
}

void ManifoldCohomology::validate() const
{
    const std::size_t n = classes_.size();
    auto cls = [&](std::size_t i) { return "'" + classes_[i].name + "'"; };

    // unit laws (catches explicit entries that contradict the implied ones)
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational expect = (j == k) ? 1 : 0;
            if (cup(unit_, j, k) != expect || cup(j, unit_, k) != expect)
                throw validation_error("manifold '" + name_ + "': unit law fails at 1 * " +
                                       cls(j));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = cup(i, j, k);
                if (c == 0)
                    continue;
                if (classes_[k].degree != classes_[i].degree + classes_[j].degree)
                    throw validation_error("manifold '" + name_ + "': degree additivity fails: " +
                                           cls(i) + " cup " + cls(j) + " -> " + cls(k));
                int sign = (classes_[i].degree * classes_[j].degree) % 2 == 0 ? 1 : -1;
                if (cup(j, i, k) != Rational(sign) * c)
                    throw validation_error("manifold '" + name_ +
                                           "': graded commutativity fails for " + cls(i) +
                                           " cup " + cls(j));
            }

    // associativity: (e_i e_j) e_k = e_i (e_j e_k), coefficient of e_m
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational lhs(0), rhs(0);
                    for (std::size_t l = 0; l < n; ++l) {
                        lhs += cup(i, j, l) * cup(l, k, m);
                        rhs += cup(j, k, l) * cup(i, l, m);
                    }
                    if (lhs != rhs)
                        throw validation_error("manifold '" + name_ +
                                               "': associativity fails on (" + cls(i) + ", " +
                                               cls(j) + ", " + cls(k) + ")");
                }
}

bool ManifoldCohomology::operator==(const ManifoldCohomology& other) const
{
    return name_ == other.name_ && dim_ == other.dim_ && classes_ == other.classes_ &&
           cup_ == other.cup_;
}

// ---------------------------------------------------------------------------
// JSON

ManifoldCohomology ManifoldCohomology::from_json_text(const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("manifold file: invalid JSON: ") + e.what());
    }
    try {
        std::string name = doc.at("name").get<std::string>();
        int dim = doc.at("dim").get<int>();
        std::vector<CohomologyClass> classes;
        for (const auto& c : doc.at("classes"))
            classes.push_back({c.at("name").get<std::string>(), c.at("degree").get<int>()});

        auto find = [&](const std::string& class_name) -> std::size_t {
            for (std::size_t i = 0; i < classes.size(); ++i)
                if (classes[i].name == class_name)
                    return i;
            throw validation_error("manifold '" + name + "': cup refers to unknown class '" +
                                   class_name + "'");
        };

        std::vector<CupEntry> cup;
        if (doc.contains("cup")) {
            for (const auto& entry : doc.at("cup")) {
                std::size_t left = find(entry.at("left").get<std::string>());
                std::size_t right = find(entry.at("right").get<std::string>());
                for (const auto& r : entry.at("result")) {
                    const auto& coeff = r.at("coeff");
                    if (!coeff.is_string())
                        throw validation_error("manifold '" + name +
                                               "': coeff must be a string like \"p/q\"");
                    cup.push_back({left, right, find(r.at("class").get<std::string>()),
                                   parse_rational(coeff.get<std::string>())});
                }
            }
        }
        return ManifoldCohomology(std::move(name), dim, std::move(classes), cup);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("manifold file: missing or mistyped field: ") +
                               e.what());
    }
}

ManifoldCohomology ManifoldCohomology::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open manifold file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string ManifoldCohomology::to_json_text() const
{
    ordered_json doc;
    doc["name"] = name_;
    doc["dim"] = dim_;
    doc["classes"] = ordered_json::array();
    for (const CohomologyClass& c : classes_)
        doc["classes"].push_back({{"name", c.name}, {"degree", c.degree}});
    doc["cup"] = ordered_json::array();
    const std::size_t n = classes_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == unit_ || j == unit_)
                continue; // implied on reload
            ordered_json result = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k)
                if (cup(i, j, k) != 0)
                    result.push_back({{"class", classes_[k].name},
                                      {"coeff", to_string(cup(i, j, k))}});
            if (!result.empty())
                doc["cup"].push_back({{"left", classes_[i].name},
                                      {"right", classes_[j].name},
                                      {"result", result}});
        }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Presets

ManifoldCohomology torus_preset()
{
    std::vector<CohomologyClass> classes = {{"1", 0}, {"a", 1}, {"b", 1}, {"ab", 2}};
    std::vector<ManifoldCohomology::CupEntry> cup = {
        {1, 2, 3, Rational(1)},  // a cup b = ab
        {2, 1, 3, Rational(-1)}, // b cup a = -ab
    };
    return ManifoldCohomology("torus", 2, std::move(classes), cup);
}

ManifoldCohomology sphere_preset(int d)
{
    if (d <= 0)
        throw usage_error("sphere_preset: d must be >= 1");
    std::vector<CohomologyClass> classes = {{"1", 0}, {"omega", 2 * d}};
    return ManifoldCohomology("sphere_" + std::to_string(2 * d), 2 * d, std::move(classes), {});
}

ManifoldCohomology resolve_manifold(const std::string& spec)
{
    if (spec == "torus")
        return torus_preset();
    if (spec.rfind("sphere:d=", 0) == 0) {
        const std::string arg = spec.substr(9);
        std::size_t used = 0;
        int d = 0;
        try {
            d = std::stoi(arg, &used);
        } catch (const std::exception&) {
            throw usage_error("bad sphere spec '" + spec + "': expected sphere:d=<positive int>");
        }
        if (used != arg.size() || d <= 0)
            throw usage_error("bad sphere spec '" + spec + "': expected sphere:d=<positive int>");
        return sphere_preset(d);
    }
    return ManifoldCohomology::load(spec);
}

} // namespace ft
