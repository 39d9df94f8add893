#include "derange/certio.hpp"

#include <fstream>

namespace derange {

namespace {

nlohmann::json members_json(const std::vector<Permutation>& members) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : members) arr.push_back(m.one_line());
    return arr;
}

std::vector<Permutation> members_from_json(const nlohmann::json& arr, int n) {
    if (!arr.is_array()) throw CertFormatError("members must be an array");
    std::vector<Permutation> out;
    for (const auto& e : arr) {
        if (!e.is_array()) throw CertFormatError("each member must be a one-line array");
        std::vector<int> line = e.get<std::vector<int>>();
        if (static_cast<int>(line.size()) != n)
            throw CertFormatError("member degree does not match n");
        try {
            out.push_back(Permutation::from_one_line(line));
        } catch (const std::invalid_argument& ex) {
            throw CertFormatError(std::string("invalid member: ") + ex.what());
        }
    }
    return out;
}

void require_nk(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("k") || !j["n"].is_number_integer() ||
        !j["k"].is_number_integer() || j["n"].get<int>() < 1 || j["k"].get<int>() < 1)
        throw CertFormatError("certificate needs positive integer fields n and k");
}

} // namespace

nlohmann::json to_json(const CliqueCertificate& cert) {
    return {{"type", "clique"},
            {"n", cert.n},
            {"k", cert.k},
            {"members", members_json(cert.members)},
            {"provenance", cert.provenance}};
}

nlohmann::json to_json(const IndependentSetCertificate& cert) {
    return {{"type", "independent_set"},
            {"n", cert.n},
            {"k", cert.k},
            {"members", members_json(cert.members)},
            {"provenance", cert.provenance}};
}

nlohmann::json to_json(const ColoringCertificate& cert) {
    return {{"type", "coloring"},
            {"n", cert.n},
            {"k", cert.k},
            {"num_colors", cert.num_colors},
            {"color_of", cert.color_of}};
}

AnyCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw CertFormatError("certificate must be an object with a type field");
    require_nk(j);
    const std::string type = j["type"].get<std::string>();
    const int n = j["n"].get<int>();
    const int k = j["k"].get<int>();
    if (type == "clique" || type == "independent_set") {
        if (!j.contains("members")) throw CertFormatError("missing members");
        auto members = members_from_json(j["members"], n);
        nlohmann::json prov = j.value("provenance", nlohmann::json::object());
        if (type == "clique") return CliqueCertificate{n, k, std::move(members), std::move(prov)};
        return IndependentSetCertificate{n, k, std::move(members), std::move(prov)};
    }
    if (type == "coloring") {
        if (!j.contains("color_of") || !j["color_of"].is_array() ||
            !j.contains("num_colors") || !j["num_colors"].is_number_integer())
            throw CertFormatError("coloring needs color_of array and num_colors");
        ColoringCertificate cert;
        cert.n = n;
        cert.k = k;
        cert.num_colors = j["num_colors"].get<int>();
        cert.color_of = j["color_of"].get<std::vector<int>>();
        return cert;
    }
    throw CertFormatError("unknown certificate type: " + type);
}

AnyCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CertFormatError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw CertFormatError(std::string("invalid JSON: ") + ex.what());
    }
    return certificate_from_json(j);
}

} // namespace derange
