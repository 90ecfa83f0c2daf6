package com.acme.shop;

public interface Notifier {
    void send(String message);
}
