"""gpgrowth: graph product gruplarında büyüme, değişmeli çift yoğunluğu ve merkezleyiciler."""
