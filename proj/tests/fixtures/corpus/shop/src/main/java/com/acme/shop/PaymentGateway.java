package com.acme.shop;

public interface PaymentGateway {
    boolean charge(double amount);
}
