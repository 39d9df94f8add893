#ifndef DERANGE_CERTIO_HPP
#define DERANGE_CERTIO_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "derange/constructions.hpp"

namespace derange {

// schema or parse problems in a certificate file
struct CertFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const CliqueCertificate& cert);
nlohmann::json to_json(const IndependentSetCertificate& cert);
nlohmann::json to_json(const ColoringCertificate& cert);

using AnyCertificate =
    std::variant<CliqueCertificate, IndependentSetCertificate, ColoringCertificate>;

// throws CertFormatError on malformed input
AnyCertificate certificate_from_json(const nlohmann::json& j);
AnyCertificate load_certificate(const std::string& path);

} // namespace derange

#endif
