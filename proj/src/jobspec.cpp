#include "rzeta/jobspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rzeta {

namespace {

mpz_class parse_bigint(const nlohmann::json& v, const char* where) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return mpz_class(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw jobspec_error(std::string("expected an integer at ") + where);
}

}  // namespace

JobSpec parse_jobspec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw jobspec_error(std::string("invalid JSON: ") + e.what());
    }
    for (const char* field : {"n", "holonomy_rank", "D", "d"})
        if (!j.contains(field)) throw jobspec_error(std::string("missing field \"") + field + "\"");

    JobSpec spec;
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw jobspec_error("\"n\" must be a nonnegative integer");
    if (!j["holonomy_rank"].is_number_integer() || j["holonomy_rank"].get<long long>() < 0)
        throw jobspec_error("\"holonomy_rank\" must be a nonnegative integer");
    spec.g.n = j["n"].get<std::size_t>();
    spec.g.holonomy_rank = j["holonomy_rank"].get<std::size_t>();

    const auto& D = j["D"];
    if (!D.is_array() || D.size() != spec.g.n) throw jobspec_error("\"D\" must be an n x n array");
    spec.aut.D = MatZ(spec.g.n, spec.g.n);
    for (std::size_t i = 0; i < spec.g.n; ++i) {
        if (!D[i].is_array() || D[i].size() != spec.g.n)
            throw jobspec_error("\"D\" must be an n x n array");
        for (std::size_t c = 0; c < spec.g.n; ++c)
            spec.aut.D.at(i, c) = parse_bigint(D[i][c], "\"D\"");
    }

    const auto& d = j["d"];
    if (!d.is_array() || d.size() != spec.g.n) throw jobspec_error("\"d\" must have length n");
    for (std::size_t i = 0; i < spec.g.n; ++i) spec.aut.d.push_back(parse_bigint(d[i], "\"d\""));

    if (j.contains("expect")) {
        const auto& e = j["expect"];
        if (!e.is_object()) throw jobspec_error("\"expect\" must be an object");
        if (e.contains("rnumbers")) {
            std::vector<RNumber> rs;
            for (const auto& v : e["rnumbers"]) {
                if (v.is_string() && v.get<std::string>() == "inf")
                    rs.push_back(RNumber::infinite());
                else
                    rs.push_back(RNumber(parse_bigint(v, "\"expect.rnumbers\"")));
            }
            spec.expect.rnumbers = std::move(rs);
        }
        for (const char* key : {"numerator", "denominator"}) {
            if (!e.contains(key)) continue;
            std::vector<mpz_class> cs;
            for (const auto& v : e[key]) cs.push_back(parse_bigint(v, key));
            if (std::string(key) == "numerator")
                spec.expect.numerator = std::move(cs);
            else
                spec.expect.denominator = std::move(cs);
        }
    }
    return spec;
}

JobSpec load_jobspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw jobspec_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw jobspec_error("read error on " + path);
    return parse_jobspec(buf.str());
}

}  // namespace rzeta
