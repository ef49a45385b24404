"""Exception types shared across the package."""


class TweetprobeError(Exception):
    """Base class for all harness errors."""


class InvalidConfig(TweetprobeError):
    pass


class MalformedRecord(TweetprobeError):
    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class DuplicateId(TweetprobeError):
    def __init__(self, id_):
        super().__init__(f"duplicate id: {id_}")
        self.id = id_


class NoInstances(TweetprobeError):
    def __init__(self, kind):
        super().__init__(f"corpus yields zero instances for task {kind}")
        self.kind = kind


class InvalidRatios(TweetprobeError):
    pass


class EmptyCorpus(TweetprobeError):
    pass


class DimMismatch(TweetprobeError):
    def __init__(self, line_no, expected, got):
        super().__init__(f"line {line_no}: expected dim {expected}, got {got}")
        self.line_no = line_no
        self.expected = expected
        self.got = got


class HeaderMismatch(TweetprobeError):
    pass


class MissingTweetEmbedding(TweetprobeError):
    def __init__(self, tweet_id):
        super().__init__(f"no embedding for tweet id: {tweet_id}")
        self.tweet_id = tweet_id


class DegenerateLabels(TweetprobeError):
    pass


class NonFiniteLoss(TweetprobeError):
    pass


class MissingSizeVariant(TweetprobeError):
    def __init__(self, size):
        super().__init__(f"no model/table variant available for size {size}")
        self.size = size


class DuplicateCell(TweetprobeError):
    pass
