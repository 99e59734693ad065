#ifndef GSO_IO_HPP
#define GSO_IO_HPP

/*
 * Self-contained JSON code-spec documents and the CSV table formats. A
 * document records the field (p, m and the modulus), the exponent e, the
 * dimension, the extended flag and the locator/multiplier encodings, so it
 * round-trips losslessly across implementations. Key order is fixed.
 */

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "quantum.hpp"

namespace gso {

using ojson = nlohmann::ordered_json;

struct CodeSpecDocument {
    u64 p = 0, m = 0;
    std::vector<u32> modulus;  ///< ascending coefficients, length m+1
    u64 e = 0;
    std::size_t k = 0;
    bool extended = false;
    std::vector<u32> locators;
    std::vector<u32> multipliers;
    struct Meta {
        std::string method = "manual";
        u64 seed = 0;
        long long lambda_degree = -1;  ///< -1 when the build was not witness-based
    } meta;
};

inline ojson to_json(const CodeSpecDocument& d) {
    ojson j;
    j["p"] = d.p;
    j["m"] = d.m;
    j["modulus"] = d.modulus;
    j["e"] = d.e;
    j["k"] = d.k;
    j["extended"] = d.extended;
    j["locators"] = d.locators;
    j["multipliers"] = d.multipliers;
    j["meta"] = ojson{{"method", d.meta.method}, {"seed", d.meta.seed}, {"lambdaDegree", d.meta.lambda_degree}};
    return j;
}

inline std::string render_document(const CodeSpecDocument& d) { return to_json(d).dump(2) + "\n"; }

inline CodeSpecDocument document_from_json(const ojson& j) {
    CodeSpecDocument d;
    try {
        d.p = j.at("p").get<u64>();
        d.m = j.at("m").get<u64>();
        d.modulus = j.at("modulus").get<std::vector<u32>>();
        d.e = j.at("e").get<u64>();
        d.k = j.at("k").get<std::size_t>();
        d.extended = j.at("extended").get<bool>();
        d.locators = j.at("locators").get<std::vector<u32>>();
        d.multipliers = j.at("multipliers").get<std::vector<u32>>();
        if (j.contains("meta")) {
            const auto& m = j.at("meta");
            if (m.contains("method")) d.meta.method = m.at("method").get<std::string>();
            if (m.contains("seed")) d.meta.seed = m.at("seed").get<u64>();
            if (m.contains("lambdaDegree")) d.meta.lambda_degree = m.at("lambdaDegree").get<long long>();
        }
    } catch (const nlohmann::json::exception& ex) {
        fail(errc::bad_document, std::string("malformed code-spec document: ") + ex.what());
    }
    return d;
}

inline CodeSpecDocument parse_document(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::bad_document, "invalid JSON");
    return document_from_json(j);
}

inline CodeSpecDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_document, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

/// A document together with the field it lives in.
struct RealizedCode {
    std::shared_ptr<FieldCtx> field;
    GrsSpec spec;
    u64 e = 0;
};

inline RealizedCode realize(const CodeSpecDocument& d) {
    RealizedCode rc;
    rc.field = FieldCtx::create_ptr(d.p, d.m, d.modulus);
    rc.e = d.e % d.m;
    rc.spec.ctx = rc.field.get();
    rc.spec.k = d.k;
    rc.spec.extended = d.extended;
    rc.spec.a.ctx = rc.spec.v.ctx = rc.field.get();
    require(d.locators.size() == d.multipliers.size(), errc::bad_document,
            "locator/multiplier count mismatch");
    for (u32 x : d.locators) rc.spec.a.e.push_back(rc.field->from_uint(x));
    for (u32 x : d.multipliers) rc.spec.v.e.push_back(rc.field->from_uint(x));
    rc.spec.validate();
    return rc;
}

inline CodeSpecDocument document_from_spec(const GrsSpec& spec, u64 e, const std::string& method,
                                           u64 seed = 0, long long lambda_degree = -1) {
    const FieldCtx& F = *spec.ctx;
    CodeSpecDocument d;
    d.p = F.p();
    d.m = F.m();
    d.modulus = F.modulus();
    d.e = e % F.m();
    d.k = spec.k;
    d.extended = spec.extended;
    for (Fe x : spec.a.e) d.locators.push_back(x.v);
    for (Fe x : spec.v.e) d.multipliers.push_back(x.v);
    d.meta.method = method;
    d.meta.seed = seed;
    d.meta.lambda_degree = lambda_degree;
    return d;
}

/// FNV-1a over the rendered document; used to chain quantum certificates to
/// their base code.
inline u64 document_hash(const CodeSpecDocument& d) {
    std::string s = render_document(d);
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// -- CSV ------------------------------------------------------------------------

inline std::string param_rows_csv(const std::vector<ParamRow>& rows) {
    std::ostringstream os;
    os << "p,m,e,n,k_max,method,verified\n";
    for (const auto& r : rows)
        os << r.p << ',' << r.m << ',' << r.e << ',' << r.n << ',' << r.k_max << ',' << r.method << ','
           << (r.verified ? "true" : "false") << '\n';
    return os.str();
}

inline std::string quantum_csv_header() { return "n,k,d,c,q,form,singleton,mds_ea\n"; }

inline std::string quantum_csv_row(const QuantumParams& qp, int form, const SingletonReport& rep) {
    std::ostringstream os;
    os << qp.n << ',' << qp.k << ',' << qp.d << ',' << qp.c << ',' << qp.q << ',' << form << ','
       << (rep.pass ? "pass" : ("fail-" + std::to_string(rep.failed))) << ','
       << (rep.mds_ea ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace gso

#endif
