package com.acme.ledger;

public interface Clock {
    long now();
}
