package com.acme.shop;

/**
 * Old in-house processor. Rejects anything above the legacy ceiling.
 */
public class LegacyGateway implements PaymentGateway {
    private static final double CEILING = 5000.0;

    @Override
    public boolean charge(double amount) {
        return amount > 0 && amount <= CEILING;
    }
}
