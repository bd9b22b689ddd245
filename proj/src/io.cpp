#include "ainf/io.hpp"

#include <fstream>
#include <sstream>

#include "ainf/error.hpp"

namespace ainf::io {

const char* const tool_version = "0.1.0";

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback)
{
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

ImHPoint point_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 3) fail(ErrorKind::InvalidConfig, "center must be [t, re, im]");
    return {j[0].get<double>(), {j[1].get<double>(), j[2].get<double>()}};
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidConfig, std::string("malformed json: ") + e.what());
    }
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::InvalidConfig, "complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json gap_to_json(const Gap& gap)
{
    return json::array({gap.lower ? json(*gap.lower) : json(nullptr), gap.upper ? json(*gap.upper) : json(nullptr)});
}

Gap gap_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::InvalidConfig, "gap must be [lower | null, upper | null]");
    Gap g;
    if (!j[0].is_null()) g.lower = j[0].get<CenterIndex>();
    if (!j[1].is_null()) g.upper = j[1].get<CenterIndex>();
    return g;
}

json order_type_to_json(const OrderType& type)
{
    switch (type.kind) {
    case OrderKind::Finite: return json{{"finite", type.count}};
    case OrderKind::OmegaUp: return "omega_up";
    case OrderKind::OmegaDown: return "omega_down";
    case OrderKind::OmegaBoth: return "omega_both";
    }
    return nullptr;
}

OrderType order_type_from_json(const json& j)
{
    if (j.is_object() && j.contains("finite")) return OrderType::finite(j.at("finite").get<std::int64_t>());
    const auto s = j.get<std::string>();
    if (s == "omega_up") return OrderType::omega_up();
    if (s == "omega_down") return OrderType::omega_down();
    if (s == "omega_both") return OrderType::omega_both();
    fail(ErrorKind::InvalidConfig, "unknown order type '" + s + "'");
}

Configuration config_from_json(const json& j)
{
    return guarded([&] {
        const auto family = j.at("family").get<std::string>();
        const auto N = get_or<std::int64_t>(j, "truncation", Configuration::default_truncation);
        if (family == "power_law") return Configuration::power_law(j.at("beta").get<double>(), N);
        if (family == "finite") {
            std::vector<ImHPoint> centers;
            for (const auto& c : j.at("centers")) centers.push_back(point_from_json(c));
            return Configuration::finite(std::move(centers));
        }
        if (family == "axial")
            return Configuration::axial(get_or<std::vector<double>>(j, "prefix", {}), get_or(j, "scale", 1.0),
                                        j.at("exponent").get<double>(), N);
        if (family == "general") {
            std::vector<ImHPoint> centers;
            for (const auto& c : get_or(j, "centers", json::array())) centers.push_back(point_from_json(c));
            std::vector<PowerTail> tails;
            for (const auto& t : get_or(j, "tails", json::array())) {
                PowerTail tail;
                tail.base = complex_from_json(get_or(t, "base", json::array({0.0, 0.0})));
                tail.sign = get_or(t, "sign", 1);
                tail.scale = get_or(t, "scale", 1.0);
                tail.exponent = t.at("exponent").get<double>();
                tail.first = get_or<std::int64_t>(t, "first", 1);
                tails.push_back(tail);
            }
            std::vector<FiberDeclaration> fibers;
            for (const auto& f : get_or(j, "fibers", json::array()))
                fibers.push_back({complex_from_json(f.at("z")), order_type_from_json(f.at("order"))});
            return Configuration::general(std::move(centers), std::move(tails), std::move(fibers),
                                          j.at("working_radius").get<double>(), N);
        }
        fail(ErrorKind::InvalidConfig, "unknown family '" + family + "'");
    });
}

json config_to_json(const Configuration& config)
{
    json j;
    j["family"] = std::string(to_string(config.family()));
    switch (config.family()) {
    case Family::PowerLaw:
        j["beta"] = config.beta();
        j["truncation"] = config.truncation();
        break;
    case Family::FiniteList: {
        json centers = json::array();
        for (const auto& c : config.explicit_centers()) centers.push_back({c.t, c.z.real(), c.z.imag()});
        j["centers"] = centers;
        break;
    }
    case Family::AxialMonotone: {
        json prefix = json::array();
        for (const auto& c : config.explicit_centers()) prefix.push_back(c.t);
        j["prefix"] = prefix;
        j["scale"] = config.tails()[0].scale;
        j["exponent"] = config.tails()[0].exponent;
        j["truncation"] = config.truncation();
        break;
    }
    case Family::GeneralAxialFibered: {
        json centers = json::array(), tails = json::array(), fibers = json::array();
        for (const auto& c : config.explicit_centers()) centers.push_back({c.t, c.z.real(), c.z.imag()});
        for (const auto& t : config.tails())
            tails.push_back({{"base", complex_to_json(t.base)},
                             {"sign", t.sign},
                             {"scale", t.scale},
                             {"exponent", t.exponent},
                             {"first", t.first}});
        for (const auto& f : config.declarations())
            fibers.push_back({{"z", complex_to_json(f.z)}, {"order", order_type_to_json(f.asymptotic)}});
        j["centers"] = centers;
        j["tails"] = tails;
        j["fibers"] = fibers;
        j["working_radius"] = config.working_radius();
        j["truncation"] = config.truncation();
        break;
    }
    }
    return j;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    return guarded([&] { return json::parse(in); });
}

Configuration load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

SectionFile section_from_json(const json& j)
{
    return guarded([&] {
        SectionFile out;
        for (const auto& d : get_or(j, "deviations", json::array())) {
            const Complex z = complex_from_json(d.at("z"));
            if (!out.section.deviations.emplace(z, gap_from_json(d.at("gap"))).second)
                fail(ErrorKind::InvalidArgument, "duplicate deviation over " + format_complex(z));
        }
        for (const auto& c : get_or(j, "unit", json::array())) out.unit.push_back(complex_from_json(c));
        return out;
    });
}

json section_to_json(const CombinatorialSection& s, const std::vector<Complex>& unit)
{
    json devs = json::array(), coeffs = json::array();
    for (const auto& [z, gap] : s.deviations) devs.push_back({{"z", complex_to_json(z)}, {"gap", gap_to_json(gap)}});
    for (const Complex& c : unit) coeffs.push_back(complex_to_json(c));
    return {{"deviations", devs}, {"unit", coeffs}};
}

SectionFile load_section(const std::string& path) { return section_from_json(read_json_file(path)); }

std::string digest(const Configuration& config)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.canonical_string()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json RunManifest::to_json() const
{
    return {{"command", command},
            {"config_digests", config_digests},
            {"seed", seed},
            {"tolerances", tolerances},
            {"version", version}};
}

std::string RunManifest::comment_block() const
{
    std::ostringstream out;
    out << "# command: " << command << '\n';
    for (const auto& d : config_digests) out << "# config: " << d << '\n';
    out << "# seed: " << seed << '\n';
    for (const auto& [k, v] : tolerances) out << "# " << k << ": " << format_double(v) << '\n';
    out << "# version: " << version << '\n';
    return out.str();
}

}  // namespace ainf::io
