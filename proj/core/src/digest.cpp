#include "despec/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <memory>

#include "despec/common.hpp"

namespace despec {

namespace {

std::string to_hex(const unsigned char* md, unsigned len) {
    static const char* digits = "0123456789abcdef";
    std::string out(len * 2, '0');
    for (unsigned i = 0; i < len; ++i) {
        out[2 * i] = digits[md[i] >> 4];
        out[2 * i + 1] = digits[md[i] & 0xf];
    }
    return out;
}

}  // namespace

std::string sha256_hex(const void* data, std::size_t len) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned mdlen = 0;
    if (!EVP_Digest(data, len, md, &mdlen, EVP_sha256(), nullptr)) {
        throw IoError("sha256 digest failed");
    }
    return to_hex(md, mdlen);
}

std::string sha256_hex(const std::string& s) { return sha256_hex(s.data(), s.size()); }

std::string sha256_file(const std::string& path) {
    std::unique_ptr<FILE, int (*)(FILE*)> f(std::fopen(path.c_str(), "rb"), &std::fclose);
    if (!f) throw IoError("cannot open for digest: " + path);
    std::unique_ptr<EVP_MD_CTX, void (*)(EVP_MD_CTX*)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || !EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr)) {
        throw IoError("sha256 init failed");
    }
    std::array<unsigned char, 1 << 16> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f.get())) > 0) {
        if (!EVP_DigestUpdate(ctx.get(), buf.data(), n)) throw IoError("sha256 update failed");
    }
    if (std::ferror(f.get())) throw IoError("read error while digesting: " + path);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned mdlen = 0;
    if (!EVP_DigestFinal_ex(ctx.get(), md, &mdlen)) throw IoError("sha256 final failed");
    return to_hex(md, mdlen);
}

}  // namespace despec
