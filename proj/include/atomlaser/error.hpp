#pragma once

#include <stdexcept>
#include <string>

namespace atomlaser
{

enum class ErrorKind
{
	NonPositiveGamma,
	NegativeFrequency,
	NegativeSqueeze,
	InvalidTimeGrid,
	UnitaryLimitUnsupported,
	WindowOverflow,
	TruncationTooLarge,
	InsufficientTruncation,
	UnknownPreset,
	IoError,
};

const char* to_string(ErrorKind kind);

class ModelError : public std::runtime_error
{
public:
	ModelError(ErrorKind kind, const std::string& what)
		: std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_{kind}
	{}

	[[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
	ErrorKind kind_;
};

} // namespace atomlaser
