package com.lambdaworks.redis;

public class FailoverBuilder {
    private Timer timer;
    private EventLoopGroup group;
    private Class socketChannelClass;
    private String host;
    private int port;
    private long connectTimeout;
    private long commandTimeout;
}
